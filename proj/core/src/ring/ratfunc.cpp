#include "ellschub/ring/ratfunc.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "ellschub/errors.hpp"
#include "ellschub/ring/gcd.hpp"

namespace ellschub {

namespace {

const Poly& one_poly() {
  static const Poly p = Poly::constant(Int(1));
  return p;
}

mpq_class to_mpq(const Int& i) { return mpq_class(i.to_mpz()); }
Int num_int(const mpq_class& q) { return Int(mpz_class(q.get_num())); }
Int den_int(const mpq_class& q) { return Int(mpz_class(q.get_den())); }

void erase_zero(std::vector<AtomPow>& at) {
  at.erase(std::remove_if(at.begin(), at.end(), [](const AtomPow& a) { return a.e == 0; }), at.end());
}

bool over_bound(const Ring& ring, const Poly& a, const Poly& b) {
  return std::max(a.total_degree(), b.total_degree()) > ring.config().gcd_degree_bound;
}

// Divides n by every atom power of `at` that divides it.
void cancel_atoms(const Ring& ring, Poly& n, std::vector<AtomPow>& at) {
  if (n.is_constant()) return;
  std::uint32_t nm = n.var_mask();
  for (auto& a : at) {
    if (ring.atom_mask(a.id) & ~nm) continue;
    while (a.e > 0) {
      auto q = n.divide_exact(ring.atom(a.id));
      if (!q) break;
      n = std::move(*q);
      --a.e;
      if (n.is_constant()) break;
    }
    if (n.is_constant()) break;
  }
  erase_zero(at);
}

// Factors d over the atom table; d becomes the atom-free cofactor.
std::vector<AtomPow> factor_atoms(const Ring& ring, Poly& d) {
  std::vector<AtomPow> at;
  if (d.is_constant()) return at;
  if (auto id = ring.find_atom(d)) {
    at.push_back({*id, 1});
    d = one_poly();
    return at;
  }
  for (std::uint32_t id = 0; id < ring.atom_count() && !d.is_constant(); ++id) {
    if (ring.atom_mask(id) & ~d.var_mask()) continue;
    std::uint32_t e = 0;
    while (!d.is_constant()) {
      auto q = d.divide_exact(ring.atom(id));
      if (!q) break;
      d = std::move(*q);
      ++e;
    }
    if (e) at.push_back({id, e});
  }
  return at;
}

void cancel_against(const Ring& ring, Poly& n, Monomial& m, std::vector<AtomPow>& at, Poly& r, bool& reduced) {
  if (!m.is_one()) {
    Monomial g = Monomial::gcd(n.monomial_content(), m);
    if (!g.is_one()) {
      n = n.div_monomial(g);
      m = m / g;
    }
  }
  if (!at.empty()) cancel_atoms(ring, n, at);
  if (!r.is_one() && !n.is_constant()) {
    if (over_bound(ring, n, r)) {
      reduced = false;
    } else {
      Poly g = poly_gcd(n, r);
      if (!g.is_constant()) {
        n = *n.divide_exact(g);
        r = *r.divide_exact(g);
      }
    }
  }
}

std::vector<AtomPow> merge_sum(const std::vector<AtomPow>& a, const std::vector<AtomPow>& b) {
  std::vector<AtomPow> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].id < b[j].id)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].id < a[i].id) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].id, a[i].e + b[j].e});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string rational_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string monomial_string(const Monomial& m, const VarRegistry& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    unsigned e = m.exp(static_cast<int>(i));
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += vars.name(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string poly_string(const Poly& p, const mpq_class& scale, const VarRegistry& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = to_mpq(t.c) * scale;
    c.canonicalize();
    bool neg = sgn(c) < 0;
    mpq_class a = abs(c);
    std::string body;
    if (t.m.is_one()) {
      body = rational_string(a);
    } else if (a == 1) {
      body = monomial_string(t.m, vars);
    } else {
      body = rational_string(a) + "*" + monomial_string(t.m, vars);
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

RatFunc RatFunc::make(const RingPtr& ring, mpq_class scale, Poly num, Monomial mono, std::vector<AtomPow> atoms, Poly rest,
                      bool reduced) {
  RatFunc r(ring);
  if (num.is_zero() || sgn(scale) == 0) return r;
  r.scale_ = std::move(scale);
  r.num_ = std::move(num);
  r.mono_ = mono;
  r.atoms_ = std::move(atoms);
  r.rest_ = rest.is_zero() ? one_poly() : std::move(rest);
  r.reduced_ = reduced || r.rest_.is_one();
  return r;
}

void RatFunc::check_same_ring(const RatFunc& o) const {
  if (ring_ != o.ring_) throw Error(ErrorKind::ModeMismatch, "rational functions from different rings");
}

RatFunc RatFunc::constant(const RingPtr& ring, const mpq_class& c) {
  if (sgn(c) == 0) return RatFunc(ring);
  mpq_class q = c;
  q.canonicalize();
  return make(ring, q, one_poly(), Monomial(), {}, one_poly(), true);
}

RatFunc RatFunc::var(const RingPtr& ring, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= ring->nvars()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  return make(ring, mpq_class(1), Poly::var(i), Monomial(), {}, one_poly(), true);
}

RatFunc RatFunc::var(const RingPtr& ring, const std::string& name) { return var(ring, ring->vars().require(name)); }

RatFunc RatFunc::from_poly(const RingPtr& ring, const Poly& p, const mpq_class& scale) {
  if (p.is_zero() || sgn(scale) == 0) return RatFunc(ring);
  Poly q = p;
  Int c = q.make_primitive();
  mpq_class s = scale * to_mpq(c);
  s.canonicalize();
  return make(ring, s, std::move(q), Monomial(), {}, one_poly(), true);
}

RatFunc RatFunc::from_fraction(const RingPtr& ring, const Poly& num, const Poly& den, const mpq_class& scale) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (num.is_zero() || sgn(scale) == 0) return RatFunc(ring);
  Poly n = num;
  Poly d = den;
  Int cn = n.make_primitive();
  Int cd = d.make_primitive();
  mpq_class s = scale * to_mpq(cn) / to_mpq(cd);
  s.canonicalize();
  Monomial md = d.monomial_content();
  d = d.div_monomial(md);
  Monomial cm = Monomial::gcd(md, n.monomial_content());
  n = n.div_monomial(cm);
  md = md / cm;
  std::vector<AtomPow> at = factor_atoms(*ring, d);
  cancel_atoms(*ring, n, at);
  bool reduced = true;
  if (!d.is_one() && !n.is_constant()) {
    if (over_bound(*ring, n, d)) {
      reduced = false;
    } else {
      Poly g = poly_gcd(n, d);
      if (!g.is_constant()) {
        n = *n.divide_exact(g);
        d = *d.divide_exact(g);
      }
    }
  }
  return make(ring, s, std::move(n), md, std::move(at), std::move(d), reduced);
}

bool RatFunc::is_one() const { return is_constant() && !is_zero() && scale_ == 1; }

bool RatFunc::is_constant() const noexcept { return num_.is_constant() && is_polynomial(); }

mpq_class RatFunc::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::Parse, "value is not constant");
  if (is_zero()) return mpq_class(0);
  return scale_;
}

Poly RatFunc::den_without_rest() const {
  Poly d = Poly::monomial(mono_, Int(1));
  for (const auto& a : atoms_) d = d * ring_->atom_power(a.id, a.e);
  return d;
}

Poly RatFunc::numerator() const {
  if (is_zero()) return Poly();
  return num_.scaled(num_int(scale_));
}

Poly RatFunc::denominator() const {
  if (is_zero()) return one_poly();
  Poly d = den_without_rest();
  if (!rest_is_one()) d = d * rest_;
  return d.scaled(den_int(scale_));
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.scale_ = -r.scale_;
  return r;
}

RatFunc RatFunc::scaled(const mpq_class& c) const {
  if (sgn(c) == 0 || is_zero()) return RatFunc(ring_);
  RatFunc r(*this);
  r.scale_ *= c;
  r.scale_.canonicalize();
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return RatFunc(a.ring_);
  if (b.is_constant()) return a.scaled(b.scale_);
  if (a.is_constant()) return b.scaled(a.scale_);
  const Ring& ring = *a.ring_;
  Poly na = a.num_, nb = b.num_;
  Monomial ma = a.mono_, mb = b.mono_;
  std::vector<AtomPow> aa = a.atoms_, ab = b.atoms_;
  Poly ra = a.rest_, rb = b.rest_;
  bool reduced = a.reduced_ && b.reduced_;
  cancel_against(ring, na, mb, ab, rb, reduced);
  cancel_against(ring, nb, ma, aa, ra, reduced);
  Poly rest = ra.is_one() ? std::move(rb) : (rb.is_one() ? std::move(ra) : ra * rb);
  mpq_class s = a.scale_ * b.scale_;
  return RatFunc::make(a.ring_, s, na * nb, ma * mb, merge_sum(aa, ab), std::move(rest), reduced);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero function");
  Poly n = den_without_rest();
  if (!rest_is_one()) n = n * rest_;
  Poly d = num_;
  Monomial md = d.monomial_content();
  d = d.div_monomial(md);
  std::vector<AtomPow> at = factor_atoms(*ring_, d);
  mpq_class s = 1 / scale_;
  s.canonicalize();
  return make(ring_, s, std::move(n), md, std::move(at), std::move(d), reduced_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  a.check_same_ring(b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero function");
  if (b.is_constant()) {
    mpq_class c = 1 / b.scale_;
    return a.scaled(c);
  }
  return a * b.inverse();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  a.check_same_ring(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return RatFunc::add(a, b, false);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  a.check_same_ring(b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return RatFunc::add(a, b, true);
}

RatFunc RatFunc::add(const RatFunc& a, const RatFunc& b, bool subtract) {
  const RingPtr& ringp = a.ring_;
  const Ring& ring = *ringp;
  bool reduced = a.reduced_ && b.reduced_;

  // Common denominator.
  Monomial mono = Monomial::lcm(a.mono_, b.mono_);
  std::array<unsigned, Monomial::kMaxVars> tie_exp{};
  bool any_tie_var = false;
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    unsigned ea = a.mono_.exp(i), eb = b.mono_.exp(i);
    if (ea == eb && ea > 0) {
      tie_exp[i] = ea;
      any_tie_var = true;
    }
  }
  std::vector<AtomPow> atoms;
  std::vector<AtomPow> ties;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cof_a, cof_b;  // (id, power)
  {
    const auto& xa = a.atoms_;
    const auto& xb = b.atoms_;
    std::size_t i = 0, j = 0;
    while (i < xa.size() || j < xb.size()) {
      if (j == xb.size() || (i < xa.size() && xa[i].id < xb[j].id)) {
        atoms.push_back(xa[i]);
        cof_b.push_back({xa[i].id, xa[i].e});
        ++i;
      } else if (i == xa.size() || xb[j].id < xa[i].id) {
        atoms.push_back(xb[j]);
        cof_a.push_back({xb[j].id, xb[j].e});
        ++j;
      } else {
        std::uint32_t e = std::max(xa[i].e, xb[j].e);
        atoms.push_back({xa[i].id, e});
        if (xa[i].e == xb[j].e) {
          ties.push_back({xa[i].id, e});
        } else if (xa[i].e > xb[j].e) {
          cof_b.push_back({xa[i].id, xa[i].e - xb[j].e});
        } else {
          cof_a.push_back({xa[i].id, xb[j].e - xa[i].e});
        }
        ++i;
        ++j;
      }
    }
  }
  const Poly& ra = a.rest_;
  const Poly& rb = b.rest_;
  Poly rest = one_poly();
  Poly rcof_a = one_poly(), rcof_b = one_poly();
  enum { kNone, kFull } rest_check = kNone;
  if (ra.is_one() && rb.is_one()) {
  } else if (ra.is_one()) {
    rest = rb;
    rcof_a = rb;
  } else if (rb.is_one()) {
    rest = ra;
    rcof_b = ra;
  } else if (ra == rb) {
    rest = ra;
    rest_check = kFull;
  } else if (over_bound(ring, ra, rb)) {
    rest = ra * rb;
    rcof_a = rb;
    rcof_b = ra;
    reduced = false;
  } else {
    Poly g = poly_gcd(ra, rb);
    Poly rbg = *rb.divide_exact(g);
    Poly rag = *ra.divide_exact(g);
    rest = ra * rbg;
    rcof_a = std::move(rbg);
    rcof_b = std::move(rag);
    if (!g.is_constant()) rest_check = kFull;
  }

  auto cofactor = [&](const Poly& n, const Monomial& m, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& cof,
                      const Poly& rc) {
    Poly p = n.mul_term(mono / m, Int(1));
    for (const auto& [id, e] : cof) p = p * ring.atom_power(id, e);
    if (!rc.is_one()) p = p * rc;
    return p;
  };

  const mpq_class& sa = a.scale_;
  const mpq_class& sb = b.scale_;
  mpz_class qa = sa.get_den(), qb = sb.get_den();
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), qa.get_mpz_t(), qb.get_mpz_t());
  mpz_class ka = sa.get_num() * (d / qa);
  mpz_class kb = sb.get_num() * (d / qb);
  if (subtract) kb = -kb;
  Poly num = cofactor(a.num_, a.mono_, cof_a, rcof_a).scaled(Int(ka));
  num += cofactor(b.num_, b.mono_, cof_b, rcof_b).scaled(Int(kb));
  if (num.is_zero()) return RatFunc(ringp);
  Int c = num.make_primitive();
  mpq_class s(c.to_mpz(), d);
  s.canonicalize();

  if (any_tie_var) {
    Monomial tie = Monomial::from_exponents(tie_exp);
    Monomial g = Monomial::gcd(num.monomial_content(), tie);
    if (!g.is_one()) {
      num = num.div_monomial(g);
      mono = mono / g;
    }
  }
  if (!ties.empty()) {
    std::vector<AtomPow> work = ties;
    cancel_atoms(ring, num, work);
    if (work != ties) {
      // Lower the exponents of the tie atoms that cancelled.
      for (auto& x : atoms) {
        auto it = std::find_if(ties.begin(), ties.end(), [&](const AtomPow& t) { return t.id == x.id; });
        if (it == ties.end()) continue;
        auto jt = std::find_if(work.begin(), work.end(), [&](const AtomPow& t) { return t.id == x.id; });
        x.e = jt == work.end() ? 0 : jt->e;
      }
      erase_zero(atoms);
    }
  }
  if (rest_check == kFull && !num.is_constant()) {
    if (over_bound(ring, num, rest)) {
      reduced = false;
    } else {
      Poly g = poly_gcd(num, rest);
      if (!g.is_constant()) {
        num = *num.divide_exact(g);
        rest = *rest.divide_exact(g);
      }
    }
  }
  return make(ringp, s, std::move(num), mono, std::move(atoms), std::move(rest), reduced);
}


RatFunc RatFunc::pow(int k) const {
  if (k == 0) return one(ring_);
  if (k < 0) return inverse().pow(-k);
  if (k == 1 || is_zero()) return *this;
  mpq_class s;
  mpz_pow_ui(s.get_num_mpz_t(), scale_.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(s.get_den_mpz_t(), scale_.get_den_mpz_t(), static_cast<unsigned long>(k));
  std::vector<AtomPow> at = atoms_;
  for (auto& a : at) a.e *= static_cast<std::uint32_t>(k);
  Poly rest = rest_is_one() ? one_poly() : rest_.pow(static_cast<unsigned>(k));
  return make(ring_, s, num_.pow(static_cast<unsigned>(k)), mono_.pow(static_cast<unsigned>(k)), std::move(at), std::move(rest),
              reduced_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.ring_ != b.ring_) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.reduced_ && b.reduced_) {
    return a.scale_ == b.scale_ && a.mono_ == b.mono_ && a.atoms_ == b.atoms_ && a.num_ == b.num_ && a.rest_ == b.rest_;
  }
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

std::size_t RatFunc::hash() const {
  if (is_zero()) return 0;
  std::size_t h = num_.hash();
  h ^= std::hash<std::string>{}(scale_.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= mono_.hash() + (h << 6);
  for (const auto& a : atoms_) h ^= (static_cast<std::size_t>(a.id) * 1315423911u + a.e) + (h << 6) + (h >> 2);
  h ^= rest_.hash() + (h << 6);
  return h;
}

std::string RatFunc::to_string() const {
  if (is_zero()) return "0";
  const VarRegistry& vars = ring_->vars();
  Poly den = den_without_rest();
  if (!rest_is_one()) den = den * rest_;
  RatFunc red = reduced_ ? *this : reduce();
  if (!reduced_) {
    den = red.den_without_rest();
    if (!red.rest_is_one()) den = den * red.rest_;
  }
  std::string n = poly_string(red.num_, red.scale_, vars);
  if (den.is_one()) return n;
  if (red.num_.size() > 1) n = "(" + n + ")";
  std::string d = poly_string(den, mpq_class(1), vars);
  bool single_var = den.size() == 1 && den.lt().m.degree() == den.lt().m.exp(std::countr_zero(den.var_mask()));
  if (!single_var) d = "(" + d + ")";
  return n + "/" + d;
}

RatFunc RatFunc::reduce() const {
  if (is_zero()) return *this;
  Poly den = den_without_rest();
  if (!rest_is_one()) den = den * rest_;
  if (reduced_) return from_fraction(ring_, num_, den, scale_);
  // Full reduction regardless of the degree bound.
  Poly g = poly_gcd(num_, rest_);
  Poly n = *num_.divide_exact(g);
  Poly r = *rest_.divide_exact(g);
  return make(ring_, scale_, std::move(n), mono_, atoms_, std::move(r), true);
}

// ---------------------------------------------------------------------------

namespace {

// Homogenized image of p under var -> N_i/D_i: returns the numerator over
// prod D_i^{deg_i p}.
Poly homogenize(const Poly& p, const std::map<int, std::pair<Poly, Poly>>& images, std::array<unsigned, Monomial::kMaxVars>& degs,
                std::map<std::pair<int, unsigned>, Poly>& npow, std::map<std::pair<int, unsigned>, Poly>& dpow) {
  degs = p.degrees();
  auto power = [](std::map<std::pair<int, unsigned>, Poly>& cache, int v, unsigned k, const Poly& base) -> const Poly& {
    auto key = std::make_pair(v, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Poly r = base.pow(k);
    return cache.emplace(key, std::move(r)).first->second;
  };
  Poly out;
  std::map<Monomial, std::vector<Term>> grouped;  // keyed by bound-variable part
  for (const auto& t : p.terms()) {
    Monomial bound;
    Monomial free = t.m;
    for (const auto& [v, img] : images) {
      unsigned e = t.m.exp(v);
      if (e) {
        bound *= Monomial::var(v, e);
        free = free.without(v);
      }
    }
    grouped[bound].push_back({free, t.c});
  }
  for (auto& [bound, ts] : grouped) {
    Poly part = Poly::from_terms(std::move(ts));
    for (const auto& [v, img] : images) {
      unsigned e = bound.exp(v);
      unsigned rest = degs[v] - e;
      if (e) part = part * power(npow, v, e, img.first);
      if (rest) part = part * power(dpow, v, rest, img.second);
    }
    out += part;
  }
  return out;
}

}  // namespace

RatFunc substitute(const RatFunc& f, const std::map<int, RatFunc>& bindings) {
  if (f.is_zero() || bindings.empty()) return f;
  const RingPtr& ring = f.ring();
  std::map<int, std::pair<Poly, Poly>> images;
  for (const auto& [v, g] : bindings) {
    if (g.ring() != ring) throw Error(ErrorKind::ModeMismatch, "binding from a different ring");
    if (v < 0 || static_cast<std::size_t>(v) >= ring->nvars()) throw Error(ErrorKind::UnknownVariable, "binding for unknown variable");
    images.emplace(v, std::make_pair(g.numerator(), g.denominator()));
  }
  Poly num = f.primitive_numerator();
  Poly den = f.denominator();
  den = den.divexact_int(den.content());
  std::map<std::pair<int, unsigned>, Poly> npow, dpow;
  std::array<unsigned, Monomial::kMaxVars> dn{}, dd{};
  Poly hn = homogenize(num, images, dn, npow, dpow);
  Poly hd = homogenize(den, images, dd, npow, dpow);
  for (const auto& [v, img] : images) {
    if (dd[v] > dn[v]) hn = hn * img.second.pow(dd[v] - dn[v]);
    if (dn[v] > dd[v]) hd = hd * img.second.pow(dn[v] - dd[v]);
  }
  if (hd.is_zero()) throw Error(ErrorKind::SubstitutionPole, "substituted denominator vanishes");
  return RatFunc::from_fraction(ring, hn, hd, f.scale());
}

RatFunc eval_at(const RatFunc& f, int var, const mpq_class& value) {
  try {
    return substitute(f, {{var, RatFunc::constant(f.ring(), value)}});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SubstitutionPole) throw Error(ErrorKind::EvaluationPole, "denominator vanishes at the evaluation point");
    throw;
  }
}

RatFunc transport(const RatFunc& f, const RingPtr& target) {
  if (f.ring() == target) return f;
  if (f.is_zero()) return RatFunc::zero(target);
  const VarRegistry& src = f.ring()->vars();
  std::vector<int> map(src.size(), -1);
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->vars().index_of(src.name(i));
  return RatFunc::from_fraction(target, f.numerator().remap(map), f.denominator().remap(map));
}

// ---------------------------------------------------------------------------

MonomialMap::MonomialMap(RingPtr ring, std::vector<Exps> images) : ring_(std::move(ring)), images_(std::move(images)) {
  images_.resize(Monomial::kMaxVars);
  for (std::size_t j = ring_->nvars(); j < images_.size(); ++j) {
    images_[j] = Exps{};
    images_[j][j] = 1;
  }
  for (std::uint32_t id = 0; id < ring_->atom_count(); ++id) {
    PolyImage img = image(ring_->atom(id));
    auto found = ring_->find_atom(img.poly);
    atom_image_ids_.push_back(found ? static_cast<long>(*found) : -1L);
    atom_images_.push_back(std::move(img));
  }
}

MonomialMap::Exps MonomialMap::image_exps(const Monomial& m) const {
  Exps out{};
  for (int j = 0; j < Monomial::kMaxVars; ++j) {
    unsigned e = m.exp(j);
    if (!e) continue;
    for (int k = 0; k < Monomial::kMaxVars; ++k) out[k] += static_cast<int>(e) * images_[j][k];
  }
  return out;
}

MonomialMap::PolyImage MonomialMap::image(const Poly& p) const {
  std::vector<Exps> exps;
  exps.reserve(p.size());
  Exps lo{};
  bool first = true;
  for (const auto& t : p.terms()) {
    exps.push_back(image_exps(t.m));
    for (int k = 0; k < Monomial::kMaxVars; ++k) lo[k] = first ? exps.back()[k] : std::min(lo[k], exps.back()[k]);
    first = false;
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    std::array<unsigned, Monomial::kMaxVars> e{};
    for (int k = 0; k < Monomial::kMaxVars; ++k) e[k] = static_cast<unsigned>(exps[i][k] - lo[k]);
    terms.push_back({Monomial::from_exponents(e), p.terms()[i].c});
  }
  PolyImage out;
  out.poly = Poly::from_terms(std::move(terms));
  Int s = out.poly.make_primitive();
  out.sign = s.sign();
  out.shift = lo;
  return out;
}

RatFunc MonomialMap::apply(const RatFunc& f) const {
  if (f.ring() != ring_) throw Error(ErrorKind::ModeMismatch, "monomial map from a different ring");
  if (f.is_zero() || f.is_constant()) return f;
  PolyImage ni = image(f.num_);
  Exps lap = ni.shift;
  int sign = ni.sign;
  Exps me = image_exps(f.mono_);
  for (int k = 0; k < Monomial::kMaxVars; ++k) lap[k] -= me[k];
  std::vector<AtomPow> atoms;
  Poly extra = one_poly();
  bool closed = true;
  for (const auto& a : f.atoms_) {
    const PolyImage& img = atom_images_[a.id];
    for (int k = 0; k < Monomial::kMaxVars; ++k) lap[k] -= static_cast<int>(a.e) * img.shift[k];
    if (img.sign < 0 && (a.e & 1)) sign = -sign;
    long id = atom_image_ids_[a.id];
    if (id >= 0) {
      atoms.push_back({static_cast<std::uint32_t>(id), a.e});
    } else {
      closed = false;
      extra = extra * img.poly.pow(a.e);
    }
  }
  Poly rest = one_poly();
  if (!f.rest_is_one()) {
    PolyImage ri = image(f.rest_);
    for (int k = 0; k < Monomial::kMaxVars; ++k) lap[k] -= ri.shift[k];
    sign *= ri.sign;
    rest = std::move(ri.poly);
  }
  std::array<unsigned, Monomial::kMaxVars> pos{}, neg{};
  for (int k = 0; k < Monomial::kMaxVars; ++k) {
    if (lap[k] > 0) pos[k] = static_cast<unsigned>(lap[k]);
    if (lap[k] < 0) neg[k] = static_cast<unsigned>(-lap[k]);
  }
  Poly num = ni.poly.mul_term(Monomial::from_exponents(pos), Int(1));
  mpq_class s = f.scale_;
  if (sign < 0) s = -s;
  if (!closed) {
    Poly den = Poly::monomial(Monomial::from_exponents(neg), Int(1)) * extra * rest;
    for (const auto& a : atoms) den = den * ring_->atom_power(a.id, a.e);
    return RatFunc::from_fraction(ring_, num, den, s);
  }
  std::sort(atoms.begin(), atoms.end(), [](const AtomPow& x, const AtomPow& y) { return x.id < y.id; });
  std::vector<AtomPow> merged;
  for (const auto& a : atoms) {
    if (!merged.empty() && merged.back().id == a.id) {
      merged.back().e += a.e;
    } else {
      merged.push_back(a);
    }
  }
  return RatFunc::make(ring_, s, std::move(num), Monomial::from_exponents(neg), std::move(merged), std::move(rest), f.reduced_);
}

}  // namespace ellschub
