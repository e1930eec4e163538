#include "ellschub/ring/gcd.hpp"

#include <bit>

namespace ellschub {

namespace {

int top_var(std::uint32_t mask) { return 31 - std::countl_zero(mask); }

Poly one() { return Poly::constant(Int(1)); }

Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  return p.lc().sign() < 0 ? -p : p;
}

Poly gcd_primitive(const Poly& a, const Poly& b);

// Symmetric residue of every coefficient modulo m.
Poly sym_mod(const Poly& p, const Int& m, const Int& half) {
  std::vector<Term> out;
  out.reserve(p.size());
  Int q, r;
  for (const auto& t : p.terms()) {
    Int::fdiv_qr(t.c, m, q, r);
    if (r > half) r -= m;
    if (!r.is_zero()) out.push_back({t.m, r});
  }
  return Poly::from_sorted(std::move(out));
}

Poly interpolate(Poly h, int v, const Int& xi) {
  Int half, r;
  Int::fdiv_qr(xi, Int(2), half, r);
  std::vector<Term> out;
  unsigned e = 0;
  while (!h.is_zero()) {
    Poly g = sym_mod(h, xi, half);
    Monomial mv = Monomial::var(v, e);
    for (const auto& t : g.terms()) out.push_back({t.m * mv, t.c});
    h = (h - g).divexact_int(xi);
    ++e;
  }
  return Poly::from_terms(std::move(out));
}

std::optional<Poly> heu(const Poly& f0, const Poly& g0) {
  Int cf = f0.content();
  Int cg = g0.content();
  Int c = Int::gcd(cf, cg);
  if (f0.is_constant() || g0.is_constant()) return Poly::constant(c);
  Poly f = f0.divexact_int(cf);
  Poly g = g0.divexact_int(cg);
  std::uint32_t mask = f.var_mask() | g.var_mask();
  int v = top_var(mask);
  Int fn = f.max_norm();
  Int gn = g.max_norm();
  Int b = Int(2) * (fn < gn ? fn : gn) + Int(29);
  Int s = Int(99) * Int::isqrt(b);
  Int xi = b < s ? b : s;
  Int q1, q2, rem;
  Int::fdiv_qr(fn, Int::abs(f.lc()), q1, rem);
  Int::fdiv_qr(gn, Int::abs(g.lc()), q2, rem);
  Int alt = Int(2) * (q1 < q2 ? q1 : q2) + Int(2);
  if (alt > xi) xi = alt;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly ff = f.eval_var(v, xi);
    Poly gg = g.eval_var(v, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto hh = heu(ff, gg);
      if (hh) {
        Poly h = interpolate(*hh, v, xi);
        h.make_primitive();
        if (!h.is_zero() && f.divisible_by(h) && g.divisible_by(h)) return h.scaled(c);
        auto cff = ff.divide_exact(*hh);
        if (cff) {
          Poly cf_poly = interpolate(*cff, v, xi);
          cf_poly.make_primitive();
          if (!cf_poly.is_zero()) {
            auto h2 = f.divide_exact(cf_poly);
            if (h2) {
              Poly hp = h2->primitive_part();
              if (g.divisible_by(hp)) return hp.scaled(c);
            }
          }
        }
      }
    }
    Int r4 = Int::isqrt(Int::isqrt(xi));
    Int q, r;
    Int::fdiv_qr(xi * Int(73794) * r4, Int(27011), q, r);
    xi = q;
  }
  return std::nullopt;
}

// Leading coefficient with respect to variable v, and its degree.
std::pair<unsigned, Poly> lead_in(const Poly& p, int v) {
  auto cs = p.coefficients_in(v);
  auto it = cs.rbegin();
  return {it->first, it->second};
}

Poly content_in(const Poly& p, int v) {
  Poly g;
  for (const auto& [e, c] : p.coefficients_in(v)) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly pseudo_rem(Poly a, const Poly& b, int v) {
  auto [db, lcb] = lead_in(b, v);
  while (!a.is_zero()) {
    unsigned da = a.degree_in(v);
    if (da < db) break;
    auto [d, lca] = lead_in(a, v);
    Poly shifted = (lca * b).mul_term(Monomial::var(v, da - db), Int(1));
    a = lcb * a - shifted;
  }
  return a;
}

Poly gcd_primitive(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return one();
  if (a == b) return a;
  std::uint32_t ma = a.var_mask();
  std::uint32_t mb = b.var_mask();
  if (ma & ~mb) {
    int v = top_var(ma & ~mb);
    Poly g = b;
    for (const auto& [e, c] : a.coefficients_in(v)) {
      g = poly_gcd(g, c);
      if (g.is_constant()) return one();
    }
    return g.primitive_part();
  }
  if (mb & ~ma) return gcd_primitive(b, a);
  if (a.size() >= b.size()) {
    if (a.divisible_by(b)) return b;
  } else if (b.divisible_by(a)) {
    return a;
  }
  if (auto h = heuristic_gcd(a, b)) return *h;
  return prs_gcd(a, b);
}

}  // namespace

std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b) {
  auto h = heu(a, b);
  if (!h) return std::nullopt;
  return normalized(*h);
}

Poly prs_gcd(const Poly& a0, const Poly& b0) {
  std::uint32_t mask = a0.var_mask() | b0.var_mask();
  if (mask == 0) return one();
  int v = top_var(mask);
  Poly ca = content_in(a0, v);
  Poly cb = content_in(b0, v);
  Poly c = poly_gcd(ca, cb);
  Poly a = *a0.divide_exact(ca);
  Poly b = *b0.divide_exact(cb);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  Poly g;
  while (true) {
    if (b.degree_in(v) == 0) {
      g = one();
      break;
    }
    Poly r = pseudo_rem(a, b, v);
    if (r.is_zero()) {
      g = b;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = one();
      break;
    }
    a = std::move(b);
    Poly cr = content_in(r, v);
    b = *r.divide_exact(cr);
  }
  if (!g.is_constant()) g = *g.divide_exact(content_in(g, v));
  Poly out = (g * c).primitive_part();
  return out;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  Int cg = Int::gcd(a.content(), b.content());
  Monomial mg = Monomial::gcd(a.monomial_content(), b.monomial_content());
  if (a.is_constant() || b.is_constant()) return Poly::constant(cg);
  Poly pa = a.div_monomial(a.monomial_content());
  Poly pb = b.div_monomial(b.monomial_content());
  pa.make_primitive();
  pb.make_primitive();
  Poly g = gcd_primitive(pa, pb);
  return g.mul_term(mg, cg);
}

}  // namespace ellschub
