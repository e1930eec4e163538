#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ellschub/ring/integer.hpp"
#include "ellschub/ring/monomial.hpp"

namespace ellschub {

struct Term {
  Monomial m;
  Int c;
};

// Sparse polynomial with integer coefficients. Terms are kept strictly
// decreasing in graded lexicographic order with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  static Poly constant(const Int& c);
  static Poly monomial(const Monomial& m, const Int& c = Int(1));
  static Poly var(int i) { return monomial(Monomial::var(i)); }
  // Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(std::vector<Term> terms);
  // Terms must already be strictly decreasing with nonzero coefficients.
  static Poly from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const Term& lt() const { return terms_.front(); }
  const Term& tt() const { return terms_.back(); }
  const Int& lc() const { return terms_.front().c; }
  Int constant_term() const;

  unsigned total_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().m.degree(); }
  unsigned degree_in(int v) const noexcept;
  std::array<unsigned, Monomial::kMaxVars> degrees() const noexcept;
  std::uint32_t var_mask() const noexcept;
  Monomial monomial_content() const noexcept;
  Int content() const;  // positive gcd of the coefficients, 0 for the zero polynomial
  Int max_norm() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly mul_term(const Monomial& m, const Int& c) const;
  Poly scaled(const Int& c) const;
  Poly divexact_int(const Int& c) const;
  Poly div_monomial(const Monomial& m) const;
  Poly pow(unsigned k) const;

  // Quotient when o divides *this in Z[x], otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& o) const;
  bool divisible_by(const Poly& o) const { return divide_exact(o).has_value(); }

  // Content removed and sign fixed so the leading coefficient is positive.
  // Returns the signed factor that was removed.
  Int make_primitive();
  Poly primitive_part() const {
    Poly p(*this);
    p.make_primitive();
    return p;
  }

  // Substitutes an integer for variable v.
  Poly eval_var(int v, const Int& value) const;
  // Coefficients as a polynomial in variable v, keyed by exponent.
  std::map<unsigned, Poly> coefficients_in(int v) const;
  static Poly from_coefficients(int v, const std::map<unsigned, Poly>& coeffs);
  // Renames variables by a permutation/injection old index -> new index.
  Poly remap(const std::vector<int>& new_index) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  std::size_t hash() const noexcept;

 private:
  std::vector<Term> terms_;
};

struct PolyHash {
  std::size_t operator()(const Poly& p) const noexcept { return p.hash(); }
};

}  // namespace ellschub
