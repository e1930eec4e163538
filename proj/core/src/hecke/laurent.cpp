#include "ellschub/hecke/laurent.hpp"

#include <sstream>

namespace ellschub {

LaurentT::LaurentT(long long c) {
  if (c != 0) c_.emplace(0, Int(c));
}

LaurentT LaurentT::monomial(int k, const Int& c) {
  LaurentT r;
  if (!c.is_zero()) r.c_.emplace(k, c);
  return r;
}

bool LaurentT::is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one(); }

Int LaurentT::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Int(0) : it->second;
}

int LaurentT::min_degree() const { return c_.begin()->first; }
int LaurentT::max_degree() const { return c_.rbegin()->first; }

void LaurentT::add_term(int k, const Int& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = c_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

LaurentT LaurentT::bar() const {
  LaurentT r;
  for (const auto& [k, c] : c_) r.c_.emplace(-k, c);
  return r;
}

LaurentT LaurentT::shifted(int s) const {
  LaurentT r;
  for (const auto& [k, c] : c_) r.c_.emplace(k + s, c);
  return r;
}

LaurentT LaurentT::positive_part() const {
  LaurentT r;
  for (auto it = c_.upper_bound(0); it != c_.end(); ++it) r.c_.emplace(it->first, it->second);
  return r;
}

LaurentT LaurentT::operator-() const {
  LaurentT r;
  for (const auto& [k, c] : c_) r.c_.emplace(k, -c);
  return r;
}

LaurentT& LaurentT::operator+=(const LaurentT& o) {
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

LaurentT& LaurentT::operator-=(const LaurentT& o) {
  for (const auto& [k, c] : o.c_) add_term(k, -c);
  return *this;
}

LaurentT operator*(const LaurentT& a, const LaurentT& b) {
  LaurentT r;
  for (const auto& [i, x] : a.c_)
    for (const auto& [j, y] : b.c_) r.add_term(i + j, x * y);
  return r;
}

RatFunc LaurentT::evaluate(const RatFunc& t) const {
  RatFunc r = RatFunc::zero(t.ring());
  for (const auto& [k, c] : c_) r += t.pow(k).scaled(c.to_mpz());
  return r;
}

std::string LaurentT::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const int k = it->first;
    Int c = it->second;
    if (c.sign() < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (k == 0) {
      os << c.to_string();
      continue;
    }
    if (!c.is_one()) os << c.to_string() << "*";
    os << var;
    if (k != 1) os << "^" << (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
  }
  return os.str();
}

}  // namespace ellschub
