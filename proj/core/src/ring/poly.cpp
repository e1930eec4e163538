#include "ellschub/ring/poly.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "ellschub/errors.hpp"

namespace ellschub {

Poly Poly::constant(const Int& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Poly Poly::monomial(const Monomial& m, const Int& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
    } else if (!t.c.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Int Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return Int(0);
}

unsigned Poly::degree_in(int v) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.exp(v));
  return d;
}

std::array<unsigned, Monomial::kMaxVars> Poly::degrees() const noexcept {
  std::array<unsigned, Monomial::kMaxVars> d{};
  for (const auto& t : terms_) {
    for (int i = 0; i < Monomial::kMaxVars; ++i) d[i] = std::max(d[i], t.m.exp(i));
  }
  return d;
}

std::uint32_t Poly::var_mask() const noexcept {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) {
    for (int i = 0; i < Monomial::kMaxVars; ++i) {
      if (t.m.exp(i)) mask |= 1u << i;
    }
  }
  return mask;
}

Monomial Poly::monomial_content() const noexcept {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().m;
  for (const auto& t : terms_) {
    g = Monomial::gcd(g, t.m);
    if (g.is_one()) break;
  }
  return g;
}

Int Poly::content() const {
  Int g(0);
  for (const auto& t : terms_) {
    g = Int::gcd(g, t.c);
    if (g.is_one()) break;
  }
  return g;
}

Int Poly::max_norm() const {
  Int m(0);
  for (const auto& t : terms_) {
    Int a = Int::abs(t.c);
    if (a > m) m = a;
  }
  return m;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.c.negate();
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].m > b[j].m) {
      out.push_back(a[i++]);
    } else if (a[i].m < b[j].m) {
      out.push_back(b[j++]);
      if (subtract) out.back().c.negate();
    } else {
      Int c = a[i].c;
      if (subtract) {
        c -= b[j].c;
      } else {
        c += b[j].c;
      }
      if (!c.is_zero()) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) {
    out.push_back(b[j++]);
    if (subtract) out.back().c.negate();
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, false);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, true);
  return r;
}

namespace {

struct HeapEntry {
  Monomial m;
  std::uint32_t i;
  std::uint32_t j;
};

struct HeapLess {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const noexcept { return a.m < b.m; }
};

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly();
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return big.mul_term(small.terms_[0].m, small.terms_[0].c);

  // Johnson's heap multiplication: one stream per term of the smaller factor.
  std::vector<HeapEntry> heap;
  heap.reserve(small.size());
  for (std::uint32_t i = 0; i < small.size(); ++i) {
    heap.push_back({small.terms_[i].m * big.terms_[0].m, i, 0});
  }
  std::make_heap(heap.begin(), heap.end(), HeapLess{});
  std::vector<Term> out;
  out.reserve(big.size() * 2);
  while (!heap.empty()) {
    Monomial m = heap.front().m;
    Int c(0);
    while (!heap.empty() && heap.front().m == m) {
      std::pop_heap(heap.begin(), heap.end(), HeapLess{});
      HeapEntry e = heap.back();
      heap.pop_back();
      c.add_mul(small.terms_[e.i].c, big.terms_[e.j].c);
      if (e.j + 1 < big.size()) {
        heap.push_back({small.terms_[e.i].m * big.terms_[e.j + 1].m, e.i, e.j + 1});
        std::push_heap(heap.begin(), heap.end(), HeapLess{});
      }
    }
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  }
  Poly r;
  r.terms_ = std::move(out);
  return r;
}

Poly Poly::mul_term(const Monomial& m, const Int& c) const {
  if (c.is_zero()) return Poly();
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
  return r;
}

Poly Poly::scaled(const Int& c) const {
  if (c.is_zero()) return Poly();
  if (c.is_one()) return *this;
  Poly r(*this);
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Poly Poly::divexact_int(const Int& c) const {
  if (c.is_one()) return *this;
  Poly r(*this);
  for (auto& t : r.terms_) t.c = Int::divexact(t.c, c);
  return r;
}

Poly Poly::div_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly r(*this);
  for (auto& t : r.terms_) t.m = t.m / m;
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = Poly::constant(Int(1));
  Poly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& o) const {
  if (o.terms_.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (terms_.empty()) return Poly();
  if (o.size() == 1) {
    const Term& d = o.terms_[0];
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!d.m.divides(t.m) || !Int::divisible(t.c, d.c)) return std::nullopt;
      r.terms_.push_back({t.m / d.m, Int::divexact(t.c, d.c)});
    }
    return r;
  }
  const Term& blt = o.terms_.front();
  const Term& btt = o.terms_.back();
  if (!blt.m.divides(terms_.front().m) || !btt.m.divides(terms_.back().m)) return std::nullopt;
  if (!Int::divisible(terms_.front().c, blt.c) || !Int::divisible(terms_.back().c, btt.c)) return std::nullopt;
  auto da = degrees();
  auto db = o.degrees();
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    if (db[i] > da[i]) return std::nullopt;
  }

  // Heap division: the heap streams the products q_k * o_j for j >= 1.
  std::vector<Term> q;
  std::vector<HeapEntry> heap;
  std::size_t ia = 0;
  while (ia < terms_.size() || !heap.empty()) {
    Monomial m;
    bool have = false;
    if (ia < terms_.size()) {
      m = terms_[ia].m;
      have = true;
    }
    if (!heap.empty() && (!have || heap.front().m > m)) m = heap.front().m;
    Int c(0);
    if (ia < terms_.size() && terms_[ia].m == m) {
      c = terms_[ia].c;
      ++ia;
    }
    while (!heap.empty() && heap.front().m == m) {
      std::pop_heap(heap.begin(), heap.end(), HeapLess{});
      HeapEntry e = heap.back();
      heap.pop_back();
      c.sub_mul(q[e.i].c, o.terms_[e.j].c);
      if (e.j + 1 < o.size()) {
        heap.push_back({q[e.i].m * o.terms_[e.j + 1].m, e.i, e.j + 1});
        std::push_heap(heap.begin(), heap.end(), HeapLess{});
      }
    }
    if (c.is_zero()) continue;
    if (!blt.m.divides(m) || !Int::divisible(c, blt.c)) return std::nullopt;
    Monomial qm = m / blt.m;
    q.push_back({qm, Int::divexact(c, blt.c)});
    auto k = static_cast<std::uint32_t>(q.size() - 1);
    heap.push_back({qm * o.terms_[1].m, k, 1});
    std::push_heap(heap.begin(), heap.end(), HeapLess{});
    // A quotient term below the trailing bound can never cancel.
    if (qm * btt.m < terms_.back().m) return std::nullopt;
  }
  Poly r;
  r.terms_ = std::move(q);
  return r;
}

Int Poly::make_primitive() {
  if (terms_.empty()) return Int(0);
  Int g = content();
  if (terms_.front().c.sign() < 0) g.negate();
  if (!g.is_one()) {
    for (auto& t : terms_) t.c = Int::divexact(t.c, g);
  }
  return g;
}

Poly Poly::eval_var(int v, const Int& value) const {
  if (!(var_mask() & (1u << v))) return *this;
  std::vector<Int> powers{Int(1)};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned e = t.m.exp(v);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    if (value.is_zero() && e > 0) continue;
    out.push_back({t.m.without(v), t.c * powers[e]});
  }
  return from_terms(std::move(out));
}

std::map<unsigned, Poly> Poly::coefficients_in(int v) const {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : terms_) buckets[t.m.exp(v)].push_back({t.m.without(v), t.c});
  std::map<unsigned, Poly> out;
  for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
  return out;
}

Poly Poly::from_coefficients(int v, const std::map<unsigned, Poly>& coeffs) {
  std::vector<Term> out;
  for (const auto& [e, p] : coeffs) {
    Monomial mv = Monomial::var(v, e);
    for (const auto& t : p.terms()) out.push_back({t.m * mv, t.c});
  }
  return from_terms(std::move(out));
}

Poly Poly::remap(const std::vector<int>& new_index) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::array<unsigned, Monomial::kMaxVars> e{};
    for (int i = 0; i < Monomial::kMaxVars; ++i) {
      unsigned x = t.m.exp(i);
      if (!x) continue;
      if (i >= static_cast<int>(new_index.size()) || new_index[i] < 0) {
        throw Error(ErrorKind::UnknownVariable, "variable has no image in the target registry");
      }
      e[new_index[i]] += x;
    }
    out.push_back({Monomial::from_exponents(e), t.c});
  }
  return from_terms(std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  }
  return true;
}

std::size_t Poly::hash() const noexcept {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h ^= t.m.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= t.c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace ellschub
