#include "ellschub/fga/bracket_expansion.hpp"

#include <algorithm>
#include <array>
#include <random>


namespace ellschub {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kP = (u64{1} << 61) - 1;

u64 mulmod(u64 a, u64 b) {
  u128 z = static_cast<u128>(a) * b;
  u64 lo = static_cast<u64>(z & kP), hi = static_cast<u64>(z >> 61);
  u64 s = lo + hi;
  return s >= kP ? s - kP : s;
}
u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + kP - b; }
u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a) { return powmod(a, kP - 2); }

u64 int_mod(const Int& c) {
  mpz_class z = c.to_mpz();
  return mpz_fdiv_ui(z.get_mpz_t(), kP);
}

// A rational function prepared for evaluation mod p.
struct ModFunc {
  struct T {
    u64 c;
    std::array<unsigned, Monomial::kMaxVars> e;
  };
  std::vector<T> num, den;

  explicit ModFunc(const RatFunc& f) {
    const Poly n = f.numerator(), d = f.denominator();
    for (const auto& t : n.terms()) num.push_back(T{int_mod(t.c), t.m.exponents()});
    for (const auto& t : d.terms()) den.push_back(T{int_mod(t.c), t.m.exponents()});
  }

  static u64 eval(const std::vector<T>& p, const std::vector<u64>& x) {
    u64 s = 0;
    for (const auto& t : p) {
      u64 v = t.c;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (t.e[i]) v = mulmod(v, powmod(x[i], t.e[i]));
      s += v;
      if (s >= kP) s -= kP;
    }
    return s;
  }

  std::optional<u64> operator()(const std::vector<u64>& x) const {
    u64 d = eval(den, x);
    if (d == 0) return std::nullopt;
    return mulmod(eval(num, x), invmod(d));
  }
};

// r/s = a mod p with |r|, s below 2^30.
std::optional<mpq_class> reconstruct(u64 a) {
  const __int128 bound = __int128{1} << 30;
  __int128 r0 = kP, r1 = a, s0 = 0, s1 = 1;
  while (r1 >= bound) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1, r1 = r2, s0 = s1, s1 = s2;
  }
  if (s1 == 0 || s1 >= bound || -s1 >= bound) return std::nullopt;
  long long num = static_cast<long long>(r1), den = static_cast<long long>(s1);
  if (den < 0) num = -num, den = -den;
  mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

void monomials(int n, int degree, std::vector<int>& cur, int pos, std::vector<std::vector<int>>& out) {
  if (pos == n - 1) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    monomials(n, degree - e, cur, pos + 1, out);
  }
}

struct Column {
  int u_power;
  std::vector<int> exponents;
};

struct Point {
  u64 f, u;
  std::vector<u64> y;
};

}  // namespace

std::optional<std::vector<BracketTerm>> expand_in_brackets(const FormalGroupAlgebra& S, const RatFunc& f, int max_degree,
                                                           std::size_t max_columns) {
  if (f.is_zero()) return std::vector<BracketTerm>{};
  const int N = static_cast<int>(S.system().num_positive());
  const std::size_t nv = S.ring()->nvars();
  const bool has_u = !S.u().is_zero();
  const ModFunc fm(f), um(S.u());
  std::vector<ModFunc> ym;
  for (int k = 0; k < N; ++k) ym.emplace_back(S.y_neg(k));
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<u64> dist(2, kP - 1);
  std::vector<Point> points;
  auto add_point = [&]() {
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<u64> pt(nv);
      for (auto& x : pt) x = dist(rng);
      auto fv = fm(pt), uv = um(pt);
      if (!fv || !uv) continue;
      Point p{*fv, *uv, {}};
      for (const auto& y : ym) {
        auto v = y(pt);
        if (!v) break;
        p.y.push_back(*v);
      }
      if (p.y.size() != ym.size()) continue;
      points.push_back(std::move(p));
      return true;
    }
    return false;
  };

  std::vector<Column> cols;
  for (int D = 0; D <= max_degree; ++D) {
    std::vector<std::vector<int>> mons;
    std::vector<int> cur(N, 0);
    monomials(N, D, cur, 0, mons);
    for (int a = 0; a <= (has_u ? D / 2 : 0); ++a)
      for (const auto& m : mons) cols.push_back(Column{a, m});
    if (cols.size() > max_columns) return std::nullopt;
    const std::size_t rows = cols.size() + 8;
    while (points.size() < rows)
      if (!add_point()) return std::nullopt;

    // reduced row echelon form mod p, pivots taken in column order
    const std::size_t C = cols.size();
    std::vector<std::vector<u64>> A(rows, std::vector<u64>(C + 1));
    for (std::size_t r = 0; r < rows; ++r) {
      const Point& p = points[r];
      for (std::size_t c = 0; c < C; ++c) {
        u64 v = powmod(p.u, cols[c].u_power);
        for (int k = 0; k < N; ++k)
          if (cols[c].exponents[k]) v = mulmod(v, powmod(p.y[k], cols[c].exponents[k]));
        A[r][c] = v;
      }
      A[r][C] = p.f;
    }
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t prow = 0;
    for (std::size_t c = 0; c < C && prow < rows; ++c) {
      std::size_t r = prow;
      while (r < rows && A[r][c] == 0) ++r;
      if (r == rows) continue;
      std::swap(A[r], A[prow]);
      const u64 inv = invmod(A[prow][c]);
      for (std::size_t j = c; j <= C; ++j) A[prow][j] = mulmod(A[prow][j], inv);
      for (std::size_t r2 = 0; r2 < rows; ++r2) {
        if (r2 == prow || A[r2][c] == 0) continue;
        const u64 m = A[r2][c];
        for (std::size_t j = c; j <= C; ++j) A[r2][j] = submod(A[r2][j], mulmod(m, A[prow][j]));
      }
      pivots.emplace_back(prow, c);
      ++prow;
    }
    bool consistent = true;
    for (std::size_t r = prow; r < rows; ++r)
      if (A[r][C] != 0) consistent = false;
    if (!consistent) continue;

    std::vector<BracketTerm> terms;
    bool ok = true;
    for (const auto& [r, c] : pivots) {
      if (A[r][C] == 0) continue;
      auto q = reconstruct(A[r][C]);
      if (!q) {
        ok = false;
        break;
      }
      terms.push_back(BracketTerm{*q, cols[c].u_power, cols[c].exponents});
    }
    if (!ok) continue;
    if (bracket_sum_value(S, terms) == f) return terms;
  }
  return std::nullopt;
}

RatFunc bracket_sum_value(const FormalGroupAlgebra& S, const std::vector<BracketTerm>& terms) {
  RatFunc sum = S.zero();
  for (const auto& t : terms) {
    RatFunc m = RatFunc::constant(S.ring(), t.coeff) * S.u().pow(t.u_power);
    for (std::size_t k = 0; k < t.exponents.size(); ++k)
      if (t.exponents[k]) m *= S.y_neg(static_cast<int>(k)).pow(t.exponents[k]);
    sum += m;
  }
  return sum;
}

std::string format_bracket_sum(const FormalGroupAlgebra& S, const std::vector<BracketTerm>& terms) {
  if (terms.empty()) return "0";
  const auto& pos = S.system().positive_roots();
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    mpq_class c = t.coeff;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    std::vector<std::pair<std::string, int>> factors;
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      if (!t.exponents[k]) continue;
      RootVec na(pos[k]);
      for (auto& x : na) x = -x;
      factors.emplace_back(S.system().bracket(na), t.exponents[k]);
    }
    std::sort(factors.begin(), factors.end());
    std::string body;
    if (t.u_power == 1) body += "u";
    else if (t.u_power > 1) body += "u^" + std::to_string(t.u_power);
    for (const auto& [b, e] : factors) body += b + (e > 1 ? "^" + std::to_string(e) : "");
    if (c != 1 || body.empty()) out += c.get_str();
    out += body;
  }
  return out;
}

}  // namespace ellschub
