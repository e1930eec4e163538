#pragma once

#include <map>
#include <string>

#include "ellschub/ring/integer.hpp"
#include "ellschub/ring/ratfunc.hpp"

namespace ellschub {

// Integer Laurent polynomial in t, stored sparsely by exponent.
class LaurentT {
 public:
  LaurentT() = default;
  LaurentT(long long c);  // NOLINT
  static LaurentT monomial(int k, const Int& c = Int(1));
  static LaurentT t() { return monomial(1); }
  static LaurentT t_inv() { return monomial(-1); }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const;
  Int coeff(int k) const;
  int min_degree() const;  // requires !is_zero()
  int max_degree() const;
  const std::map<int, Int>& terms() const noexcept { return c_; }

  LaurentT bar() const;  // t -> 1/t
  LaurentT shifted(int k) const;
  LaurentT positive_part() const;  // terms of exponent > 0

  LaurentT operator-() const;
  LaurentT& operator+=(const LaurentT& o);
  LaurentT& operator-=(const LaurentT& o);
  friend LaurentT operator+(LaurentT a, const LaurentT& b) { return a += b; }
  friend LaurentT operator-(LaurentT a, const LaurentT& b) { return a -= b; }
  friend LaurentT operator*(const LaurentT& a, const LaurentT& b);
  LaurentT& operator*=(const LaurentT& o) { return *this = *this * o; }
  friend bool operator==(const LaurentT& a, const LaurentT& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentT& a, const LaurentT& b) { return !(a == b); }

  // Value at the ring element t (a RatFunc), e.g. the Hecke parameter.
  RatFunc evaluate(const RatFunc& t) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void add_term(int k, const Int& c);
  std::map<int, Int> c_;
};

}  // namespace ellschub
