#include "ellschub/gkm/gkm_class.hpp"

namespace ellschub {

GkmClass::GkmClass(FgaPtr fga) : fga_(std::move(fga)), values_(fga_->group().size(), fga_->zero()) {}

GkmClass GkmClass::constant(FgaPtr fga, const RatFunc& c) {
  GkmClass r(std::move(fga));
  for (auto& v : r.values_) v = c;
  return r;
}

std::vector<WeylElem> GkmClass::support() const {
  std::vector<WeylElem> out;
  for (WeylElem w = 0; w < values_.size(); ++w)
    if (!values_[w].is_zero()) out.push_back(w);
  return out;
}

bool GkmClass::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

GkmClass GkmClass::operator-() const {
  GkmClass r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

GkmClass& GkmClass::operator+=(const GkmClass& o) {
  for (std::size_t w = 0; w < values_.size(); ++w) values_[w] += o.values_[w];
  return *this;
}

GkmClass& GkmClass::operator-=(const GkmClass& o) {
  for (std::size_t w = 0; w < values_.size(); ++w) values_[w] -= o.values_[w];
  return *this;
}

GkmClass GkmClass::scaled(const RatFunc& c) const {
  GkmClass r = *this;
  for (auto& v : r.values_) v *= c;
  return r;
}

std::string GkmClass::to_string() const {
  const WeylGroup& G = fga_->group();
  std::string s;
  for (WeylElem w = 0; w < values_.size(); ++w) {
    s += (w == G.identity() ? std::string("id") : G.format(w)) + ": " + values_[w].to_string() + "\n";
  }
  return s;
}

}  // namespace ellschub
