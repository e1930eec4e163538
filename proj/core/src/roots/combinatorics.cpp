#include "ellschub/roots/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "ellschub/errors.hpp"

namespace ellschub {

namespace {

void check_range(const WeylGroup& g, int m) {
  const RootSystem& rs = g.system();
  const int n = rs.n();
  bool ok = false;
  if (rs.family() == Family::A) {
    ok = m >= 1 && m <= n;
  } else if (rs.family() == Family::C) {
    ok = m != 0 && m >= -n && m <= n;
  } else {
    throw Error(ErrorKind::WrongType, "coset representatives are defined for types A and C");
  }
  if (!ok) throw Error(ErrorKind::IndexOutOfRange, "m = " + std::to_string(m) + " out of range for " + rs.spec().name());
}

}  // namespace

WeylElem highest_coset_rep(const WeylGroup& g, int m) {
  check_range(g, m);
  const int n = g.system().n();
  WeylElem best = 0;
  int best_len = -1;
  for (WeylElem w = 0; w < g.size(); ++w) {
    if (g.window(w)[n - 1] == m && g.length(w) > best_len) {
      best = w;
      best_len = g.length(w);
    }
  }
  return best;
}

int highest_coset_length(const WeylGroup& g, int m) {
  check_range(g, m);
  const int n = g.system().n();
  const int N = g.max_length();
  if (g.system().family() == Family::A) return N - m + 1;
  return m > 0 ? N - (m + n - 1) : N - (m + n);
}

bool avoids_patterns_A(const WeylGroup& g, WeylElem w) {
  if (g.system().family() != Family::A) throw Error(ErrorKind::WrongType, "pattern avoidance is implemented for type A");
  const auto& p = g.window(w);
  const int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          // 3412
          if (p[c] < p[d] && p[d] < p[a] && p[a] < p[b]) return false;
          // 4231
          if (p[d] < p[b] && p[b] < p[c] && p[c] < p[a]) return false;
        }
  return true;
}

bool ehresmann_leq(const std::vector<int>& v, const std::vector<int>& w) {
  const std::size_t n = v.size();
  for (std::size_t p = 1; p < n; ++p) {
    std::vector<int> a(v.begin(), v.begin() + p), b(w.begin(), w.begin() + p);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < p; ++k)
      if (a[k] > b[k]) return false;
  }
  return true;
}

bool proctor_leq(const std::vector<int>& v, const std::vector<int>& w) {
  const std::size_t n = v.size();
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<int> a(v.begin() + p, v.end()), b(w.begin() + p, w.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] < b[k]) return false;
  }
  return true;
}

int extended_entry(const std::vector<int>& window, int k) {
  const int n = static_cast<int>(window.size());
  if (k >= 1 && k <= n) return window[k - 1];
  if (k <= 0 && k >= -(n - 1)) return -window[-k];
  throw Error(ErrorKind::IndexOutOfRange, "position outside the extended index set");
}

int extended_position_of_n(const std::vector<int>& window) {
  const int n = static_cast<int>(window.size());
  for (int k = -(n - 1); k <= n; ++k) {
    if (extended_entry(window, k) == n) return k;
  }
  throw Error(ErrorKind::InvalidElement, "window is not a signed permutation");
}

bool has_distinct_letters(const WeylGroup& g, WeylElem w) {
  const Word& word = g.word(w);
  std::set<int> letters(word.begin(), word.end());
  return letters.size() == word.size();
}

}  // namespace ellschub
