#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <string>
#include <utility>

namespace ellschub {

// Arbitrary precision integer with an inline 64-bit fast path.
// Values that fit in [-(2^63-1), 2^63-1] are always stored inline.
class Int {
 public:
  Int() noexcept : small_(0), big_(nullptr) {}
  Int(long long v) : small_(0), big_(nullptr) {  // NOLINT
    if (v == LLONG_MIN) {
      set_big_from_ll(v);
    } else {
      small_ = v;
    }
  }
  Int(int v) noexcept : small_(v), big_(nullptr) {}  // NOLINT
  Int(long v) : Int(static_cast<long long>(v)) {}    // NOLINT
  explicit Int(const mpz_class& z) : small_(0), big_(nullptr) { assign_mpz(z.get_mpz_t()); }
  explicit Int(const std::string& s);

  Int(const Int& o) : small_(o.small_), big_(nullptr) {
    if (o.big_) {
      big_ = new __mpz_struct;
      mpz_init_set(big_, o.big_);
    }
  }
  Int(Int&& o) noexcept : small_(o.small_), big_(o.big_) {
    o.big_ = nullptr;
    o.small_ = 0;
  }
  Int& operator=(const Int& o) {
    if (this == &o) return *this;
    if (o.big_) {
      if (!big_) {
        big_ = new __mpz_struct;
        mpz_init_set(big_, o.big_);
      } else {
        mpz_set(big_, o.big_);
      }
    } else {
      release();
      small_ = o.small_;
    }
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    if (this == &o) return *this;
    release();
    small_ = o.small_;
    big_ = o.big_;
    o.big_ = nullptr;
    o.small_ = 0;
    return *this;
  }
  ~Int() { release(); }

  bool is_small() const noexcept { return big_ == nullptr; }
  long long small_value() const noexcept { return small_; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  int sign() const noexcept {
    if (big_) return mpz_sgn(big_);
    return (small_ > 0) - (small_ < 0);
  }

  mpz_class to_mpz() const;
  void get_mpz(mpz_ptr out) const;
  std::string to_string() const;
  double to_double() const;
  std::size_t hash() const noexcept;
  std::size_t bit_length() const;

  Int operator-() const;
  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);
  void add_mul(const Int& a, const Int& b);  // *this += a*b
  void sub_mul(const Int& a, const Int& b);  // *this -= a*b
  void negate();

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(const Int& a, const Int& b);

  friend bool operator==(const Int& a, const Int& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return mpz_cmp(a.big_, b.big_) == 0;
    return false;
  }
  friend bool operator!=(const Int& a, const Int& b) noexcept { return !(a == b); }
  friend int compare(const Int& a, const Int& b);
  friend bool operator<(const Int& a, const Int& b) { return compare(a, b) < 0; }
  friend bool operator>(const Int& a, const Int& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Int& a, const Int& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Int& a, const Int& b) { return compare(a, b) >= 0; }

  // Exact quotient; b must divide a.
  static Int divexact(const Int& a, const Int& b);
  static bool divisible(const Int& a, const Int& b);
  // Floor division and remainder with b > 0.
  static void fdiv_qr(const Int& a, const Int& b, Int& q, Int& r);
  static Int gcd(const Int& a, const Int& b);
  static Int abs(const Int& a);
  static Int pow(const Int& a, unsigned e);
  static Int isqrt(const Int& a);

 private:
  void release() noexcept {
    if (big_) {
      mpz_clear(big_);
      delete big_;
      big_ = nullptr;
    }
  }
  void set_big_from_ll(long long v);
  void assign_mpz(mpz_srcptr z);
  void normalize();

  long long small_;
  mpz_ptr big_;
};

}  // namespace ellschub
