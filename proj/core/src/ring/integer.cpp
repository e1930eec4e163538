#include "ellschub/ring/integer.hpp"

#include <functional>
#include <stdexcept>

namespace ellschub {

namespace {

struct TmpZ {
  mpz_t z;
  TmpZ() { mpz_init(z); }
  ~TmpZ() { mpz_clear(z); }
  TmpZ(const TmpZ&) = delete;
  TmpZ& operator=(const TmpZ&) = delete;
};

inline bool fits_small(mpz_srcptr z) {
  if (!mpz_fits_slong_p(z)) return false;
  return mpz_get_si(z) != LONG_MIN;
}

}  // namespace

Int::Int(const std::string& s) : small_(0), big_(nullptr) {
  mpz_class z;
  if (z.set_str(s, 10) != 0) throw std::invalid_argument("invalid integer literal: " + s);
  assign_mpz(z.get_mpz_t());
}

void Int::set_big_from_ll(long long v) {
  if (!big_) {
    big_ = new __mpz_struct;
    mpz_init(big_);
  }
  mpz_set_si(big_, static_cast<long>(v));
}

void Int::assign_mpz(mpz_srcptr z) {
  if (fits_small(z)) {
    release();
    small_ = mpz_get_si(z);
  } else {
    if (!big_) {
      big_ = new __mpz_struct;
      mpz_init(big_);
    }
    mpz_set(big_, z);
    small_ = 0;
  }
}

void Int::normalize() {
  if (big_ && fits_small(big_)) {
    long long v = mpz_get_si(big_);
    release();
    small_ = v;
  }
}

void Int::get_mpz(mpz_ptr out) const {
  if (big_) {
    mpz_set(out, big_);
  } else {
    mpz_set_si(out, static_cast<long>(small_));
  }
}

mpz_class Int::to_mpz() const {
  mpz_class z;
  get_mpz(z.get_mpz_t());
  return z;
}

std::string Int::to_string() const {
  if (!big_) return std::to_string(small_);
  return to_mpz().get_str();
}

double Int::to_double() const { return big_ ? mpz_get_d(big_) : static_cast<double>(small_); }

std::size_t Int::hash() const noexcept {
  if (!big_) return std::hash<long long>{}(small_);
  std::size_t h = static_cast<std::size_t>(big_->_mp_size) * 0x9e3779b97f4a7c15ULL;
  int n = big_->_mp_size < 0 ? -big_->_mp_size : big_->_mp_size;
  for (int i = 0; i < n; ++i) h ^= static_cast<std::size_t>(big_->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t Int::bit_length() const {
  if (big_) return mpz_sizeinbase(big_, 2);
  unsigned long long a = small_ < 0 ? static_cast<unsigned long long>(-small_) : static_cast<unsigned long long>(small_);
  return a == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(a));
}

Int Int::operator-() const {
  Int r(*this);
  r.negate();
  return r;
}

void Int::negate() {
  if (big_) {
    mpz_neg(big_, big_);
    normalize();
  } else {
    small_ = -small_;
  }
}

Int& Int::operator+=(const Int& o) {
  if (!big_ && !o.big_) {
    long long r;
    if (!__builtin_add_overflow(small_, o.small_, &r) && r != LLONG_MIN) {
      small_ = r;
      return *this;
    }
  }
  TmpZ a, b;
  get_mpz(a.z);
  o.get_mpz(b.z);
  mpz_add(a.z, a.z, b.z);
  assign_mpz(a.z);
  return *this;
}

Int& Int::operator-=(const Int& o) {
  if (!big_ && !o.big_) {
    long long r;
    if (!__builtin_sub_overflow(small_, o.small_, &r) && r != LLONG_MIN) {
      small_ = r;
      return *this;
    }
  }
  TmpZ a, b;
  get_mpz(a.z);
  o.get_mpz(b.z);
  mpz_sub(a.z, a.z, b.z);
  assign_mpz(a.z);
  return *this;
}

Int& Int::operator*=(const Int& o) {
  if (!big_ && !o.big_) {
    long long r;
    if (!__builtin_mul_overflow(small_, o.small_, &r) && r != LLONG_MIN) {
      small_ = r;
      return *this;
    }
  }
  TmpZ a, b;
  get_mpz(a.z);
  o.get_mpz(b.z);
  mpz_mul(a.z, a.z, b.z);
  assign_mpz(a.z);
  return *this;
}

Int operator*(const Int& a, const Int& b) {
  Int r(a);
  r *= b;
  return r;
}

void Int::add_mul(const Int& a, const Int& b) {
  if (!big_ && !a.big_ && !b.big_) {
    long long p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r) && r != LLONG_MIN) {
      small_ = r;
      return;
    }
  }
  TmpZ x, y, z;
  get_mpz(x.z);
  a.get_mpz(y.z);
  b.get_mpz(z.z);
  mpz_addmul(x.z, y.z, z.z);
  assign_mpz(x.z);
}

void Int::sub_mul(const Int& a, const Int& b) {
  if (!big_ && !a.big_ && !b.big_) {
    long long p, r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_sub_overflow(small_, p, &r) && r != LLONG_MIN) {
      small_ = r;
      return;
    }
  }
  TmpZ x, y, z;
  get_mpz(x.z);
  a.get_mpz(y.z);
  b.get_mpz(z.z);
  mpz_submul(x.z, y.z, z.z);
  assign_mpz(x.z);
}

int compare(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
  if (a.big_ && b.big_) {
    int c = mpz_cmp(a.big_, b.big_);
    return (c > 0) - (c < 0);
  }
  if (a.big_) return mpz_sgn(a.big_);
  return -mpz_sgn(b.big_);
}

Int Int::divexact(const Int& a, const Int& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) return Int(a.small_ / b.small_);
  TmpZ x, y;
  a.get_mpz(x.z);
  b.get_mpz(y.z);
  mpz_divexact(x.z, x.z, y.z);
  Int r;
  r.assign_mpz(x.z);
  return r;
}

bool Int::divisible(const Int& a, const Int& b) {
  if (b.is_zero()) return a.is_zero();
  if (!a.big_ && !b.big_) return a.small_ % b.small_ == 0;
  TmpZ x, y;
  a.get_mpz(x.z);
  b.get_mpz(y.z);
  return mpz_divisible_p(x.z, y.z) != 0;
}

void Int::fdiv_qr(const Int& a, const Int& b, Int& q, Int& r) {
  if (b.sign() <= 0) throw std::domain_error("fdiv_qr needs a positive divisor");
  if (!a.big_ && !b.big_) {
    long long qq = a.small_ / b.small_;
    long long rr = a.small_ % b.small_;
    if (rr < 0) {
      rr += b.small_;
      qq -= 1;
    }
    q = Int(qq);
    r = Int(rr);
    return;
  }
  TmpZ x, y, qz, rz;
  a.get_mpz(x.z);
  b.get_mpz(y.z);
  mpz_fdiv_qr(qz.z, rz.z, x.z, y.z);
  q.assign_mpz(qz.z);
  r.assign_mpz(rz.z);
}

Int Int::gcd(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) {
    unsigned long long x = a.small_ < 0 ? static_cast<unsigned long long>(-a.small_) : static_cast<unsigned long long>(a.small_);
    unsigned long long y = b.small_ < 0 ? static_cast<unsigned long long>(-b.small_) : static_cast<unsigned long long>(b.small_);
    while (y) {
      unsigned long long t = x % y;
      x = y;
      y = t;
    }
    return Int(static_cast<long long>(x));
  }
  TmpZ x, y;
  a.get_mpz(x.z);
  b.get_mpz(y.z);
  mpz_gcd(x.z, x.z, y.z);
  Int r;
  r.assign_mpz(x.z);
  return r;
}

Int Int::abs(const Int& a) { return a.sign() < 0 ? -a : a; }

Int Int::pow(const Int& a, unsigned e) {
  TmpZ x;
  a.get_mpz(x.z);
  mpz_pow_ui(x.z, x.z, e);
  Int r;
  r.assign_mpz(x.z);
  return r;
}

Int Int::isqrt(const Int& a) {
  if (a.sign() < 0) throw std::domain_error("isqrt of negative integer");
  TmpZ x;
  a.get_mpz(x.z);
  mpz_sqrt(x.z, x.z);
  Int r;
  r.assign_mpz(x.z);
  return r;
}

}  // namespace ellschub
