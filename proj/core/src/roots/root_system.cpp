#include "ellschub/roots/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

#include "ellschub/errors.hpp"

namespace ellschub {

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  std::string u;
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "A") return Family::A;
  if (u == "B") return Family::B;
  if (u == "C") return Family::C;
  if (u == "D") return Family::D;
  if (u == "G2" || u == "G") return Family::G2;
  throw Error(ErrorKind::UnsupportedSpec, "unknown family " + s);
}

std::string CartanSpec::name() const {
  if (family == Family::G2) return "G2";
  return std::string(family_name(family)) + std::to_string(rank);
}

std::string format_root(const RootVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

RootSystemPtr RootSystem::build(const CartanSpec& spec) {
  return RootSystemPtr(new RootSystem(spec));
}

RootSystem::RootSystem(const CartanSpec& spec) : spec_(spec) {
  const int r = spec.rank;
  switch (spec.family) {
    case Family::A:
      if (r < 1) throw Error(ErrorKind::UnsupportedSpec, "type A needs rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (r < 2) throw Error(ErrorKind::UnsupportedSpec, "types B and C need rank >= 2");
      break;
    case Family::D:
      if (r < 3) throw Error(ErrorKind::UnsupportedSpec, "type D needs rank >= 3");
      break;
    case Family::G2:
      if (r != 2) throw Error(ErrorKind::UnsupportedSpec, "G2 has rank 2");
      break;
  }
  if (r > 16) throw Error(ErrorKind::UnsupportedSpec, "rank too large");

  cartan_.assign(r, std::vector<int>(r, 0));
  sym_.assign(r, 1);
  if (spec.family == Family::G2) {
    cartan_ = {{2, -3}, {-1, 2}};
    sym_ = {1, 3};
  } else {
    const int nn = n();
    simple_eps_.assign(r, std::vector<int>(nn, 0));
    for (int g = 0; g < r; ++g) {
      auto& e = simple_eps_[g];
      if (spec.family == Family::A) {
        e[g] = 1;
        e[g + 1] = -1;
      } else if (g == 0) {
        if (spec.family == Family::C) e[0] = 2;
        if (spec.family == Family::B) e[0] = 1;
        if (spec.family == Family::D) e[0] = e[1] = 1;
      } else {
        e[g] = 1;
        e[g - 1] = -1;
      }
    }
    std::vector<int> norm(r);
    for (int i = 0; i < r; ++i) {
      norm[i] = std::inner_product(simple_eps_[i].begin(), simple_eps_[i].end(), simple_eps_[i].begin(), 0);
    }
    int mn = *std::min_element(norm.begin(), norm.end());
    for (int i = 0; i < r; ++i) {
      sym_[i] = norm[i] / mn;
      for (int j = 0; j < r; ++j) {
        int dot = std::inner_product(simple_eps_[i].begin(), simple_eps_[i].end(), simple_eps_[j].begin(), 0);
        cartan_[i][j] = 2 * dot / norm[i];
      }
    }
  }
  enumerate_roots();
}

int RootSystem::n() const noexcept {
  switch (spec_.family) {
    case Family::A: return spec_.rank + 1;
    case Family::G2: return 0;
    default: return spec_.rank;
  }
}

int RootSystem::label(int g) const {
  if (spec_.family == Family::A || spec_.family == Family::G2) return g + 1;
  return g;
}

int RootSystem::generator(int label) const {
  int g = (spec_.family == Family::A || spec_.family == Family::G2) ? label - 1 : label;
  if (g < 0 || g >= spec_.rank) {
    throw Error(ErrorKind::InvalidWord, "no generator labelled " + std::to_string(label) + " in " + spec_.name());
  }
  return g;
}

RootVec RootSystem::simple_root(int i) const {
  RootVec v(spec_.rank, 0);
  v.at(i) = 1;
  return v;
}

int RootSystem::pairing(const RootVec& lambda, int i) const {
  int s = 0;
  for (int j = 0; j < spec_.rank; ++j) s += lambda[j] * cartan_[i][j];
  return s;
}

RootVec RootSystem::reflect(int i, const RootVec& lambda) const {
  RootVec out(lambda);
  out[i] -= pairing(lambda, i);
  return out;
}

bool RootSystem::is_positive(const RootVec& lambda) {
  bool nonzero = false;
  for (int c : lambda) {
    if (c < 0) return false;
    if (c) nonzero = true;
  }
  return nonzero;
}

void RootSystem::enumerate_roots() {
  std::set<RootVec> all;
  std::vector<RootVec> stack;
  for (int i = 0; i < spec_.rank; ++i) {
    all.insert(simple_root(i));
    stack.push_back(simple_root(i));
  }
  while (!stack.empty()) {
    RootVec v = stack.back();
    stack.pop_back();
    for (int i = 0; i < spec_.rank; ++i) {
      RootVec w = reflect(i, v);
      if (all.insert(w).second) stack.push_back(w);
    }
  }
  for (const auto& v : all) {
    if (is_positive(v)) positive_.push_back(v);
  }
  std::sort(positive_.begin(), positive_.end(), [](const RootVec& a, const RootVec& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (std::size_t k = 0; k < positive_.size(); ++k) index_.emplace(positive_[k], static_cast<int>(k));
}

std::optional<int> RootSystem::positive_index(const RootVec& lambda) const {
  if (static_cast<int>(lambda.size()) != spec_.rank) return std::nullopt;
  auto it = index_.find(lambda);
  if (it != index_.end()) return it->second;
  RootVec neg(lambda);
  for (auto& c : neg) c = -c;
  it = index_.find(neg);
  if (it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<int> RootSystem::to_epsilon(const RootVec& lambda) const {
  if (!has_epsilon()) throw Error(ErrorKind::WrongType, "no epsilon coordinates for G2");
  std::vector<int> e(n(), 0);
  for (int g = 0; g < spec_.rank; ++g) {
    for (int k = 0; k < n(); ++k) e[k] += lambda[g] * simple_eps_[g][k];
  }
  return e;
}

RootVec RootSystem::from_epsilon(const std::vector<int>& e) const {
  if (!has_epsilon()) throw Error(ErrorKind::WrongType, "no epsilon coordinates for G2");
  if (static_cast<int>(e.size()) != n()) throw Error(ErrorKind::Parse, "wrong number of epsilon coordinates");
  const int r = spec_.rank;
  RootVec c(r, 0);
  auto fail = [] { return Error(ErrorKind::Parse, "vector is not in the root lattice"); };
  if (spec_.family == Family::A) {
    int s = 0;
    for (int k = 0; k < r; ++k) {
      s += e[k];
      c[k] = s;
    }
  } else {
    // alpha_i = e_{i+1} - e_i for i >= 1: solve from the top coordinate down
    int nn = n();
    std::vector<int> cc(nn + 1, 0);
    int lowest = spec_.family == Family::D ? 3 : 2;
    for (int k = nn; k >= lowest; --k) cc[k - 1] = e[k - 1] + cc[k];
    if (spec_.family == Family::D) {
      int twice = e[0] + e[1] + cc[2];
      if (twice % 2) throw fail();
      cc[0] = twice / 2;
      cc[1] = cc[0] - e[0];
    } else {
      int a = spec_.family == Family::C ? 2 : 1;
      int num = e[0] + cc[1];
      if (num % a) throw fail();
      cc[0] = num / a;
    }
    for (int g = 0; g < r; ++g) c[g] = cc[g];
  }
  if (to_epsilon(c) != e) throw fail();
  return c;
}

int RootSystem::act_on_signed_index(int g, int v) const {
  int sign = v < 0 ? -1 : 1;
  int a = std::abs(v);
  if (spec_.family == Family::A) {
    int i = g + 1;
    if (a == i) return sign * (i + 1);
    if (a == i + 1) return sign * i;
    return v;
  }
  if (spec_.family == Family::G2) throw Error(ErrorKind::WrongType, "G2 has no signed permutation model");
  if (g == 0) {
    if (spec_.family == Family::D) {
      if (a == 1) return -sign * 2;
      if (a == 2) return -sign * 1;
      return v;
    }
    return a == 1 ? -v : v;
  }
  if (a == g) return sign * (g + 1);
  if (a == g + 1) return sign * g;
  return v;
}

namespace {

std::string fmt_pair(int i, int j, int n) {
  std::string s = "[" + std::to_string(i);
  if (n >= 10) s += ",";
  s += std::to_string(j) + "]";
  return s;
}

}  // namespace

std::string RootSystem::bracket(const RootVec& lambda) const {
  if (!has_epsilon() || !is_root(lambda)) return {};
  auto e = to_epsilon(lambda);
  const int nn = n();
  if (spec_.family == Family::A) {
    int a = 0, b = 0;
    for (int k = 0; k < nn; ++k) {
      if (e[k] == 1) a = k + 1;
      if (e[k] == -1) b = k + 1;
    }
    return fmt_pair(b, a, nn);
  }
  // y_lambda = [ij] with lambda = e_i - e_j, e_{-k} = -e_k, e_0 = 0
  std::vector<std::pair<int, int>> support;
  for (int k = 0; k < nn; ++k) {
    if (e[k]) support.emplace_back(k + 1, e[k]);
  }
  std::vector<std::pair<int, int>> reps;
  if (support.size() == 2) {
    auto [p, s] = support[0];
    auto [q, t] = support[1];
    reps.emplace_back(s * p, -t * q);
    reps.emplace_back(t * q, -s * p);
  } else if (support.size() == 1) {
    auto [p, s] = support[0];
    if (std::abs(s) == 2) {
      reps.emplace_back(s / 2 * p, -s / 2 * p);
    } else {
      reps.emplace_back(s * p, 0);
      reps.emplace_back(0, -s * p);
    }
  } else {
    return {};
  }
  auto best = *std::max_element(reps.begin(), reps.end(),
                                [](const auto& x, const auto& y) { return x.second < y.second; });
  return fmt_pair(best.first, best.second, nn);
}

RootVec RootSystem::parse_bracket(const std::string& text) const {
  if (!has_epsilon()) throw Error(ErrorKind::Parse, "bracket notation is not available for " + spec_.name());
  std::string s = text;
  if (!s.empty() && s.front() == '[') s.erase(s.begin());
  if (!s.empty() && s.back() == ']') s.pop_back();
  std::vector<int> nums;
  bool separated = s.find_first_of(", ") != std::string::npos;
  std::size_t pos = 0;
  while (pos < s.size()) {
    char c = s[pos];
    if (c == ',' || c == ' ') {
      ++pos;
      continue;
    }
    int sign = 1;
    if (c == '-') {
      sign = -1;
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
      throw Error(ErrorKind::Parse, "bad bracket [" + text + "]");
    }
    int v = 0;
    if (separated) {
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
    } else {
      v = s[pos++] - '0';
    }
    nums.push_back(sign * v);
  }
  if (nums.size() != 2) throw Error(ErrorKind::Parse, "bracket needs two indices: [" + text + "]");
  const int nn = n();
  std::vector<int> e(nn, 0);
  auto add = [&](int idx, int coef) {
    if (idx == 0) {
      if (spec_.family != Family::B) throw Error(ErrorKind::Parse, "index 0 in bracket [" + text + "]");
      return;
    }
    if (std::abs(idx) > nn) throw Error(ErrorKind::Parse, "index out of range in bracket [" + text + "]");
    e[std::abs(idx) - 1] += idx > 0 ? coef : -coef;
  };
  int i = nums[0], j = nums[1];
  if (spec_.family == Family::A) {
    if (i <= 0 || j <= 0) throw Error(ErrorKind::Parse, "type A brackets use positive indices");
    add(j, 1);
    add(i, -1);
  } else {
    add(i, 1);
    add(j, -1);
  }
  RootVec lambda;
  try {
    lambda = from_epsilon(e);
  } catch (const Error&) {
    throw Error(ErrorKind::Parse, "bracket [" + text + "] is not a root");
  }
  if (!is_root(lambda)) throw Error(ErrorKind::Parse, "bracket [" + text + "] is not a root");
  return lambda;
}

}  // namespace ellschub
