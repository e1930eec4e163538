#pragma once

#include <string>
#include <vector>

#include "ellschub/fga/formal_group_algebra.hpp"

namespace ellschub {

// A function W -> S, stored densely and indexed by WeylElem.
class GkmClass {
 public:
  explicit GkmClass(FgaPtr fga);
  static GkmClass constant(FgaPtr fga, const RatFunc& c);

  const FgaPtr& fga() const noexcept { return fga_; }
  std::size_t size() const noexcept { return values_.size(); }
  const RatFunc& at(WeylElem w) const { return values_[w]; }
  void set(WeylElem w, RatFunc f) { values_[w] = std::move(f); }
  const std::vector<RatFunc>& values() const noexcept { return values_; }
  std::vector<WeylElem> support() const;
  bool is_zero() const;

  GkmClass operator-() const;
  GkmClass& operator+=(const GkmClass& o);
  GkmClass& operator-=(const GkmClass& o);
  friend GkmClass operator+(GkmClass a, const GkmClass& b) { return a += b; }
  friend GkmClass operator-(GkmClass a, const GkmClass& b) { return a -= b; }
  GkmClass scaled(const RatFunc& c) const;
  friend bool operator==(const GkmClass& a, const GkmClass& b) { return a.values_ == b.values_; }
  friend bool operator!=(const GkmClass& a, const GkmClass& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FgaPtr fga_;
  std::vector<RatFunc> values_;
};

}  // namespace ellschub
