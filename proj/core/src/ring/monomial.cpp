#include "ellschub/ring/monomial.hpp"

#include <algorithm>

#include "ellschub/errors.hpp"

namespace ellschub {

namespace {

using Packed = Monomial::Packed;

inline Packed shifted(unsigned v, int f) { return static_cast<Packed>(v) << (112 - 16 * f); }

}  // namespace

Monomial Monomial::var(int i, unsigned e) {
  if (i < 0 || i >= kMaxVars) throw Error(ErrorKind::RegistryFull, "variable index out of range");
  if (e > kMaxDegree) throw Error(ErrorKind::DegreeOverflow, "monomial degree overflow");
  Monomial m;
  m.bits_ = shifted(e, 0) | shifted(e, i + 1);
  return m;
}

Monomial Monomial::from_exponents(const std::array<unsigned, kMaxVars>& e) {
  unsigned long total = 0;
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    total += e[i];
    if (total > kMaxDegree) throw Error(ErrorKind::DegreeOverflow, "monomial degree overflow");
    m.bits_ |= shifted(e[i], i + 1);
  }
  m.bits_ |= shifted(static_cast<unsigned>(total), 0);
  return m;
}

std::array<unsigned, Monomial::kMaxVars> Monomial::exponents() const noexcept {
  std::array<unsigned, kMaxVars> e{};
  for (int i = 0; i < kMaxVars; ++i) e[i] = exp(i);
  return e;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (static_cast<unsigned long>(degree()) + o.degree() > kMaxDegree) {
    throw Error(ErrorKind::DegreeOverflow, "monomial degree overflow");
  }
  Monomial r;
  r.bits_ = bits_ + o.bits_;
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (degree() > o.degree()) return false;
  for (int f = 1; f <= kMaxVars; ++f) {
    if (field(f) > o.field(f)) return false;
  }
  return true;
}

Monomial Monomial::pow(unsigned k) const {
  if (k == 0) return Monomial();
  if (static_cast<unsigned long>(degree()) * k > kMaxDegree) {
    throw Error(ErrorKind::DegreeOverflow, "monomial degree overflow");
  }
  Monomial r;
  r.bits_ = bits_ * static_cast<Packed>(k);
  return r;
}

Monomial Monomial::without(int i) const noexcept {
  unsigned e = exp(i);
  Monomial r;
  r.bits_ = bits_ - shifted(e, i + 1) - shifted(e, 0);
  return r;
}

Monomial Monomial::with_exp(int i, unsigned e) const {
  Monomial r = without(i);
  return r * var(i, e);
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  unsigned total = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned e = std::min(a.exp(i), b.exp(i));
    total += e;
    r.bits_ |= shifted(e, i + 1);
  }
  r.bits_ |= shifted(total, 0);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::array<unsigned, kMaxVars> e{};
  for (int i = 0; i < kMaxVars; ++i) e[i] = std::max(a.exp(i), b.exp(i));
  return from_exponents(e);
}

}  // namespace ellschub
