#include "ellschub/hecke/hecke_algebra.hpp"

#include <fstream>
#include <sstream>

#include "ellschub/errors.hpp"

namespace ellschub {

namespace {

const LaurentT& q_minus() {  // t^-1 - t
  static const LaurentT v = LaurentT::t_inv() - LaurentT::t();
  return v;
}

}  // namespace

HeckeElem HeckeElem::basis(WeylElem w, const LaurentT& c) {
  HeckeElem h;
  h.add(w, c);
  return h;
}

LaurentT HeckeElem::coeff(WeylElem w) const {
  auto it = c_.find(w);
  return it == c_.end() ? LaurentT() : it->second;
}

void HeckeElem::add(WeylElem w, const LaurentT& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = c_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

HeckeElem HeckeElem::operator-() const {
  HeckeElem r;
  for (const auto& [w, c] : c_) r.c_.emplace(w, -c);
  return r;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
  for (const auto& [w, c] : o.c_) add(w, c);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) {
  for (const auto& [w, c] : o.c_) add(w, -c);
  return *this;
}

HeckeElem operator*(const LaurentT& s, const HeckeElem& h) {
  HeckeElem r;
  if (s.is_zero()) return r;
  for (const auto& [w, c] : h.c_) r.add(w, s * c);
  return r;
}

HeckeAlgebra::HeckeAlgebra(WeylGroupPtr group) : group_(std::move(group)), bar_tau_(group_->size()) {}

HeckeElem HeckeAlgebra::mul_gen(const HeckeElem& h, int i) const {
  HeckeElem r;
  for (const auto& [w, c] : h.terms()) {
    WeylElem ws = group_->rmul(w, i);
    r.add(ws, c);
    if (group_->length(ws) < group_->length(w)) r.add(w, q_minus() * c);
  }
  return r;
}

HeckeElem HeckeAlgebra::lmul_gen(int i, const HeckeElem& h) const {
  HeckeElem r;
  for (const auto& [w, c] : h.terms()) {
    WeylElem sw = group_->lmul(i, w);
    r.add(sw, c);
    if (group_->length(sw) < group_->length(w)) r.add(w, q_minus() * c);
  }
  return r;
}

HeckeElem HeckeAlgebra::mul(const HeckeElem& a, const HeckeElem& b) const {
  HeckeElem r;
  for (const auto& [w, c] : b.terms()) {
    HeckeElem p = a;
    for (int i : group_->word(w)) p = mul_gen(p, i);
    r += c * p;
  }
  return r;
}

const HeckeElem& HeckeAlgebra::bar_tau(WeylElem w) const {
  std::lock_guard lock(mutex_);
  if (bar_tau_[w]) return *bar_tau_[w];
  // elements are numbered compatibly with length, so prefixes come first
  for (WeylElem v = 0; v <= w; ++v) {
    if (bar_tau_[v]) continue;
    if (v == group_->identity()) {
      bar_tau_[v] = one();
      continue;
    }
    const Word& word = group_->word(v);
    const int i = word.back();
    const HeckeElem& prev = *bar_tau_[group_->rmul(v, i)];
    // tau_i^-1 = tau_i + t - t^-1
    bar_tau_[v] = mul_gen(prev, i) - q_minus() * prev;
  }
  return *bar_tau_[w];
}

HeckeElem HeckeAlgebra::bar(const HeckeElem& h) const {
  HeckeElem r;
  for (const auto& [w, c] : h.terms()) r += c.bar() * bar_tau(w);
  return r;
}

std::string HeckeAlgebra::to_string(const HeckeElem& h) const {
  if (h.is_zero()) return "0";
  std::string s;
  for (auto it = h.terms().rbegin(); it != h.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::string name = it->first == group_->identity() ? "id" : group_->format(it->first);
    s += "(" + it->second.to_string() + ")*tau[" + name + "]";
  }
  return s;
}

std::string format_qpoly(const std::vector<Int>& p, const std::string& var) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    Int c = p[k];
    if (!s.empty()) {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (k == 0) {
      s += c.to_string();
      continue;
    }
    if (c == Int(-1)) s += "-";
    else if (!c.is_one()) s += c.to_string() + "*";
    s += var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

KLTable::KLTable(std::shared_ptr<const HeckeAlgebra> hecke)
    : hecke_(std::move(hecke)), gamma_(hecke_->group().size()) {}

const HeckeElem& KLTable::kl_basis(WeylElem w) const {
  std::lock_guard lock(mutex_);
  return compute(w);
}

const HeckeElem& KLTable::compute(WeylElem w) const {
  if (gamma_[w]) return *gamma_[w];
  const WeylGroup& G = group();
  if (w == G.identity()) {
    gamma_[w] = hecke_->one();
    return *gamma_[w];
  }
  const int i = G.word(w).back();
  const HeckeElem& prev = compute(G.rmul(w, i));
  HeckeElem c = hecke_->mul_gen(prev, i) + LaurentT::t() * prev;
  // clear constant terms below the top, longest first
  WeylElem cur = w;
  while (true) {
    auto it = c.terms().lower_bound(cur);
    if (it == c.terms().begin()) break;
    --it;
    cur = it->first;
    Int c0 = it->second.coeff(0);
    if (!c0.is_zero()) c -= LaurentT::monomial(0, c0) * compute(cur);
  }
  gamma_[w] = std::move(c);
  return *gamma_[w];
}

void KLTable::compute_all() const {
  std::lock_guard lock(mutex_);
  for (WeylElem w = 0; w < group().size(); ++w) compute(w);
}

std::vector<Int> KLTable::kl_polynomial(WeylElem v, WeylElem w) const {
  const WeylGroup& G = group();
  if (!G.bruhat_leq(v, w))
    throw Error(ErrorKind::NotComparable, G.format(v) + " is not below " + G.format(w) + " in Bruhat order");
  LaurentT c = kl_basis(w).coeff(v);
  const int d = G.length(w) - G.length(v);
  std::vector<Int> p;
  for (int k = 0; 2 * k <= d; ++k) p.push_back(c.coeff(d - 2 * k));
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  return p;
}

Int KLTable::mu(WeylElem z, WeylElem v) const {
  const WeylGroup& G = group();
  if (z == v || !G.bruhat_leq(z, v))
    throw Error(ErrorKind::NotComparable, G.format(z) + " is not strictly below " + G.format(v));
  return kl_basis(v).coeff(z).coeff(1);
}

bool KLTable::rationally_smooth(WeylElem w) const {
  const WeylGroup& G = group();
  for (const auto& [v, c] : kl_basis(w).terms()) {
    if (c != LaurentT::monomial(G.length(w) - G.length(v))) return false;
  }
  return true;
}

std::string KLTable::default_file_name(const CartanSpec& spec) { return "kltable-" + spec.name() + ".txt"; }

namespace {

std::string header_for(const WeylGroup& G) {
  return "# ellschub-kltable v1 family=" + std::string(family_name(G.system().family())) +
         " rank=" + std::to_string(G.rank());
}

std::string word_text(const WeylGroup& G, WeylElem w) {
  return w == G.identity() ? "e" : G.format_word(G.word(w));
}

}  // namespace

void KLTable::save(const std::string& path) const {
  compute_all();
  const WeylGroup& G = group();
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Cache, "cannot write " + path);
  out << header_for(G) << "\n";
  for (WeylElem w = 0; w < G.size(); ++w) {
    const std::string ww = word_text(G, w);
    for (const auto& [v, c] : kl_basis(w).terms()) {
      out << word_text(G, v) << ";" << ww << ";";
      auto p = kl_polynomial(v, w);
      for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << p[k].to_string();
      out << "\n";
    }
  }
  if (!out) throw Error(ErrorKind::Cache, "failed writing " + path);
}

bool KLTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  const WeylGroup& G = group();
  std::string line;
  if (!std::getline(in, line) || line != header_for(G))
    throw Error(ErrorKind::Cache, path + ": header does not match " + header_for(G));
  std::vector<std::optional<HeckeElem>> loaded(G.size());
  int lineno = 1;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      auto a = line.find(';'), b = line.find(';', a == std::string::npos ? a : a + 1);
      if (a == std::string::npos || b == std::string::npos) throw Error(ErrorKind::Cache, "missing field");
      WeylElem v = G.from_word(G.parse_word(line.substr(0, a)));
      WeylElem w = G.from_word(G.parse_word(line.substr(a + 1, b - a - 1)));
      if (!G.bruhat_leq(v, w)) throw Error(ErrorKind::Cache, "entry for incomparable pair");
      const int d = G.length(w) - G.length(v);
      std::stringstream ss(line.substr(b + 1));
      std::string tok;
      LaurentT c;
      for (int k = 0; std::getline(ss, tok, ','); ++k) c += LaurentT::monomial(d - 2 * k, Int(tok));
      if (!loaded[w]) loaded[w] = HeckeElem();
      loaded[w]->add(v, c);
    }
  } catch (const Error& e) {
    throw Error(ErrorKind::Cache, path + ":" + std::to_string(lineno) + ": " + e.what());
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Cache, path + ":" + std::to_string(lineno) + ": " + e.what());
  }
  std::lock_guard lock(mutex_);
  for (WeylElem w = 0; w < G.size(); ++w) {
    if (loaded[w] && !gamma_[w]) gamma_[w] = std::move(loaded[w]);
  }
  return true;
}

}  // namespace ellschub
