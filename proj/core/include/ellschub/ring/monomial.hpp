#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace ellschub {

// Packed exponent vector. Field 0 holds the total degree, fields 1..7 the
// exponents of variables 0..6, most significant first, so that comparing the
// packed integers is graded lexicographic order over registry order.
class Monomial {
 public:
  using Packed = unsigned __int128;
  static constexpr int kMaxVars = 7;
  static constexpr unsigned kMaxDegree = 0xFFFF;

  constexpr Monomial() noexcept : bits_(0) {}

  static Monomial var(int i, unsigned e = 1);
  static Monomial from_exponents(const std::array<unsigned, kMaxVars>& e);

  unsigned degree() const noexcept { return field(0); }
  unsigned exp(int i) const noexcept { return field(i + 1); }
  bool is_one() const noexcept { return bits_ == 0; }
  Packed bits() const noexcept { return bits_; }
  std::array<unsigned, kMaxVars> exponents() const noexcept;

  // Throws DegreeOverflow when the total degree leaves 16 bits.
  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
  // Requires o | *this.
  Monomial operator/(const Monomial& o) const noexcept {
    Monomial r;
    r.bits_ = bits_ - o.bits_;
    return r;
  }
  bool divides(const Monomial& o) const noexcept;  // *this | o
  Monomial pow(unsigned k) const;
  Monomial without(int i) const noexcept;
  Monomial with_exp(int i, unsigned e) const;

  static Monomial gcd(const Monomial& a, const Monomial& b) noexcept;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.bits_ == b.bits_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return a.bits_ != b.bits_; }
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return a.bits_ < b.bits_; }
  friend bool operator>(const Monomial& a, const Monomial& b) noexcept { return a.bits_ > b.bits_; }
  friend bool operator<=(const Monomial& a, const Monomial& b) noexcept { return a.bits_ <= b.bits_; }
  friend bool operator>=(const Monomial& a, const Monomial& b) noexcept { return a.bits_ >= b.bits_; }

  std::size_t hash() const noexcept {
    auto lo = static_cast<std::uint64_t>(bits_);
    auto hi = static_cast<std::uint64_t>(bits_ >> 64);
    return std::hash<std::uint64_t>{}(lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x7f4a7c159e3779b9ULL + (lo << 6)));
  }

 private:
  unsigned field(int f) const noexcept { return static_cast<unsigned>((bits_ >> (112 - 16 * f)) & 0xFFFF); }
  Packed bits_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace ellschub
