#include "ellschub/qw/twisted_algebra.hpp"

#include "ellschub/errors.hpp"

namespace ellschub {

RatFunc QWElem::coeff(WeylElem w) const {
  auto it = c_.find(w);
  return it == c_.end() ? RatFunc::zero(ring_) : it->second;
}

void QWElem::add(WeylElem w, const RatFunc& q) {
  if (q.is_zero()) return;
  if (!ring_) ring_ = q.ring();
  auto [it, fresh] = c_.emplace(w, q);
  if (!fresh) {
    it->second += q;
    if (it->second.is_zero()) c_.erase(it);
  }
}

QWElem QWElem::operator-() const {
  QWElem r(ring_);
  for (const auto& [w, q] : c_) r.c_.emplace(w, -q);
  return r;
}

QWElem& QWElem::operator+=(const QWElem& o) {
  for (const auto& [w, q] : o.c_) add(w, q);
  return *this;
}

QWElem& QWElem::operator-=(const QWElem& o) {
  for (const auto& [w, q] : o.c_) add(w, -q);
  return *this;
}

QWElem operator*(const RatFunc& s, const QWElem& h) {
  QWElem r(s.ring());
  if (s.is_zero()) return r;
  for (const auto& [w, q] : h.c_) r.add(w, s * q);
  return r;
}

TwistedAlgebra::TwistedAlgebra(FgaPtr fga) : fga_(std::move(fga)) {}

QWElem TwistedAlgebra::delta(WeylElem w) const {
  QWElem r = zero();
  r.add(w, fga_->one());
  return r;
}

QWElem TwistedAlgebra::scalar(const RatFunc& q) const {
  QWElem r = zero();
  r.add(group().identity(), q);
  return r;
}

QWElem TwistedAlgebra::qw_mul(const QWElem& a, const QWElem& b) const {
  const WeylGroup& G = group();
  QWElem r = zero();
  for (const auto& [v, q] : a.terms()) {
    for (const auto& [v2, q2] : b.terms()) r.add(G.mul(v, v2), q * fga_->weyl_act(v, q2));
  }
  return r;
}

QWElem TwistedAlgebra::demazure_X(int i) const {
  RatFunc inv = fga_->x(i).inverse();
  QWElem r = zero();
  r.add(group().generator(i), inv);
  r.add(group().identity(), -inv);
  return r;
}

QWElem TwistedAlgebra::pushpull_Y(int i) const {
  QWElem r = zero();
  r.add(group().identity(), fga_->y_image(group().identity(), i, true).inverse());
  r.add(group().generator(i), fga_->x(i).inverse());
  return r;
}

QWElem TwistedAlgebra::tau(int i) const {
  return fga_->t_plus_inv() * pushpull_Y(i) - scalar(fga_->t());
}

QWElem TwistedAlgebra::word_product(const std::function<QWElem(int)>& gen, const Word& word) const {
  QWElem r = delta(group().identity());
  for (int i : word) r = qw_mul(r, gen(i));
  return r;
}

QWElem TwistedAlgebra::y_word(const Word& word) const {
  return word_product([this](int i) { return pushpull_Y(i); }, word);
}

QWElem TwistedAlgebra::from_hecke(const HeckeElem& h) const {
  const RatFunc& t = fga_->t();
  QWElem r = zero();
  for (const auto& [w, c] : h.terms()) {
    r += c.evaluate(t) * word_product([this](int i) { return tau(i); }, group().word(w));
  }
  return r;
}

std::map<WeylElem, Word> TwistedAlgebra::shortlex_basis() const {
  std::map<WeylElem, Word> out;
  for (WeylElem w = 0; w < group().size(); ++w) out.emplace(w, group().word(w));
  return out;
}

std::map<WeylElem, RatFunc> TwistedAlgebra::expand_in_Y_basis(const QWElem& h0,
                                                               const std::map<WeylElem, Word>& basis_words) const {
  std::map<WeylElem, RatFunc> out;
  QWElem h = h0;
  while (!h.is_zero()) {
    // elements are numbered by length, then shortlex word
    auto top = std::prev(h.terms().end());
    const WeylElem v = top->first;
    auto bw = basis_words.find(v);
    if (bw == basis_words.end())
      throw Error(ErrorKind::SingularLeadingTerm, "no basis word for " + group().format(v));
    QWElem y = y_word(bw->second);
    RatFunc lead = y.coeff(v);
    if (lead.is_zero() || std::prev(y.terms().end())->first != v)
      throw Error(ErrorKind::SingularLeadingTerm, "basis element for " + group().format(v) + " has no leading term");
    RatFunc c = top->second / lead;
    out.emplace(v, c);
    h -= c * y;
    if (h.terms().count(v))
      throw Error(ErrorKind::SingularLeadingTerm, "elimination did not clear " + group().format(v));
  }
  return out;
}

GkmClass TwistedAlgebra::act_on_gkm(const QWElem& h, const GkmClass& f) const {
  const WeylGroup& G = group();
  GkmClass out(fga_);
  for (WeylElem w = 0; w < G.size(); ++w) {
    RatFunc acc = fga_->zero();
    for (const auto& [v, q] : h.terms()) {
      const RatFunc& fv = f.at(G.mul(w, v));
      if (fv.is_zero()) continue;
      acc += fga_->weyl_act(w, q) * fv;
    }
    out.set(w, std::move(acc));
  }
  return out;
}

GkmClass TwistedAlgebra::apply_Y(int i, const GkmClass& f) const {
  const WeylGroup& G = group();
  GkmClass out(fga_);
  for (WeylElem w = 0; w < G.size(); ++w) {
    const RatFunc& a = f.at(w);
    const RatFunc& b = f.at(G.rmul(w, i));
    RatFunc acc = fga_->zero();
    if (!a.is_zero()) acc += a / fga_->y_image(w, i, true);
    if (!b.is_zero()) acc += b / fga_->y_image(w, i, false);
    out.set(w, std::move(acc));
  }
  return out;
}

GkmClass TwistedAlgebra::apply_tau(int i, const GkmClass& f) const {
  return apply_Y(i, f).scaled(fga_->t_plus_inv()) - f.scaled(fga_->t());
}

std::string TwistedAlgebra::to_string(const QWElem& h) const {
  if (h.is_zero()) return "0";
  std::string s;
  for (const auto& [w, q] : h.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + q.to_string() + ")*d[" + (w == group().identity() ? std::string("id") : group().format(w)) + "]";
  }
  return s;
}

}  // namespace ellschub
