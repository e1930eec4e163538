#pragma once

#include <gmpxx.h>

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ellschub/ring/ring.hpp"

namespace ellschub {

struct AtomPow {
  std::uint32_t id;
  std::uint32_t e;
  friend bool operator==(const AtomPow& a, const AtomPow& b) { return a.id == b.id && a.e == b.e; }
};

// Exact rational function, canonical when reduced():
//   value = scale * num / (mono * prod atom^e * rest)
// with num primitive with positive leading coefficient, the denominator
// factors primitive with positive leading coefficient, rest free of atoms and
// of variable factors, and num coprime to the whole denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(RingPtr ring) : ring_(std::move(ring)) {}

  static RatFunc zero(const RingPtr& ring) { return RatFunc(ring); }
  static RatFunc one(const RingPtr& ring) { return constant(ring, mpq_class(1)); }
  static RatFunc constant(const RingPtr& ring, const mpq_class& c);
  static RatFunc constant(const RingPtr& ring, long c) { return constant(ring, mpq_class(c)); }
  static RatFunc var(const RingPtr& ring, int i);
  static RatFunc var(const RingPtr& ring, const std::string& name);
  static RatFunc from_poly(const RingPtr& ring, const Poly& p, const mpq_class& scale = mpq_class(1));
  // General canonicalization of num/den; den must be nonzero.
  static RatFunc from_fraction(const RingPtr& ring, const Poly& num, const Poly& den, const mpq_class& scale = mpq_class(1));

  const RingPtr& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const noexcept;
  bool is_polynomial() const noexcept { return mono_.is_one() && atoms_.empty() && rest_is_one(); }
  bool reduced() const noexcept { return reduced_; }

  const mpq_class& scale() const noexcept { return scale_; }
  const Poly& primitive_numerator() const noexcept { return num_; }
  const Monomial& den_monomial() const noexcept { return mono_; }
  const std::vector<AtomPow>& den_atoms() const noexcept { return atoms_; }
  const Poly& den_rest() const noexcept { return rest_; }

  // Integer polynomials N, D with value N/D.
  Poly numerator() const;
  Poly denominator() const;
  mpq_class constant_value() const;  // requires is_constant()

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const;
  RatFunc pow(int k) const;
  RatFunc scaled(const mpq_class& c) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  std::size_t hash() const;

  // Canonical text, e.g. "(x1^2*x2 - 1)/(x1 + 1)".
  std::string to_string() const;

  // Re-runs the full reduction; identity on reduced values.
  RatFunc reduce() const;

 private:
  friend class MonomialMap;
  bool rest_is_one() const noexcept { return rest_.is_zero() || rest_.is_one(); }
  Poly den_without_rest() const;
  static RatFunc make(const RingPtr& ring, mpq_class scale, Poly num, Monomial mono, std::vector<AtomPow> atoms, Poly rest,
                      bool reduced);
  void check_same_ring(const RatFunc& o) const;
  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract);

  RingPtr ring_;
  mpq_class scale_{0};
  Poly num_;
  Monomial mono_;
  std::vector<AtomPow> atoms_;
  Poly rest_;  // empty or 1 means trivial
  bool reduced_ = true;
};

// Simultaneous substitution of variables by rational functions of the same
// ring. Throws SubstitutionPole when the new denominator vanishes.
RatFunc substitute(const RatFunc& f, const std::map<int, RatFunc>& bindings);
RatFunc eval_at(const RatFunc& f, int var, const mpq_class& value);
// Moves f into another ring by variable name; every variable occurring in f
// must exist in the target.
RatFunc transport(const RatFunc& f, const RingPtr& target);

// Laurent monomial automorphism: variable j maps to prod_k x_k^{images[j][k]}.
// The map must be invertible over Z on the affected variables.
class MonomialMap {
 public:
  using Exps = std::array<int, Monomial::kMaxVars>;
  MonomialMap(RingPtr ring, std::vector<Exps> images);

  RatFunc apply(const RatFunc& f) const;
  const RingPtr& ring() const noexcept { return ring_; }

 private:
  struct PolyImage {
    Poly poly;  // primitive, positive lc, no monomial factor
    Exps shift; // Laurent monomial factor
    int sign;
  };
  PolyImage image(const Poly& p) const;
  Exps image_exps(const Monomial& m) const;

  RingPtr ring_;
  std::vector<Exps> images_;
  std::vector<PolyImage> atom_images_;
  std::vector<long> atom_image_ids_;  // -1 when the image is not an atom
};

}  // namespace ellschub
