#include "ellschub/fga/formal_group_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "ellschub/errors.hpp"
#include "ellschub/fga/bracket_expansion.hpp"
#include "ellschub/ring/parse.hpp"

namespace ellschub {

const char* mode_name(FglMode m) {
  switch (m) {
    case FglMode::Generic: return "generic";
    case FglMode::Additive: return "additive";
    case FglMode::KTheory: return "ktheory";
    case FglMode::Lorentz: return "lorentz";
    case FglMode::Hecke: return "hecke";
  }
  return "?";
}

FglMode parse_mode(const std::string& s0) {
  std::string s;
  for (char c : s0) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "generic" || s == "hyperbolic") return FglMode::Generic;
  if (s == "additive" || s == "cohomology") return FglMode::Additive;
  if (s == "ktheory" || s == "multiplicative" || s == "k") return FglMode::KTheory;
  if (s == "lorentz") return FglMode::Lorentz;
  if (s == "hecke") return FglMode::Hecke;
  throw Error(ErrorKind::UnsupportedSpec, "unknown mode " + s0);
}

const char* chart_name(Chart c) { return c == Chart::Root ? "root" : "exp"; }

Chart parse_chart(const std::string& s) {
  if (s == "root") return Chart::Root;
  if (s == "exp") return Chart::Exp;
  throw Error(ErrorKind::UnsupportedSpec, "unknown chart " + s);
}

namespace {

Poly monomial_poly(int var, unsigned e = 1) { return Poly::monomial(Monomial::var(var, e)); }

Poly const_poly(long c) { return Poly::constant(Int(c)); }

// z^lambda for lambda with non-negative coordinates.
Poly z_power(const RootVec& lambda, int first) {
  std::array<unsigned, Monomial::kMaxVars> e{};
  for (std::size_t k = 0; k < lambda.size(); ++k) e[first + k] = static_cast<unsigned>(lambda[k]);
  return Poly::monomial(Monomial::from_exponents(e));
}

}  // namespace

FgaPtr FormalGroupAlgebra::create(WeylGroupPtr group, FglMode mode, Chart chart, RingConfig config) {
  if (chart == Chart::Exp && mode == FglMode::Additive) {
    throw Error(ErrorKind::UnsupportedSpec, "the additive law has no exponential chart");
  }
  std::shared_ptr<FormalGroupAlgebra> f(new FormalGroupAlgebra());
  f->group_ = group;
  f->mode_ = mode;
  f->chart_ = chart;
  const RootSystem& rs = group->system();
  const int r = rs.rank();

  std::vector<std::string> names;
  if (chart == Chart::Root) {
    if (mode == FglMode::Generic) names = {"mu1", "mu2"};
    if (mode == FglMode::Lorentz) names = {"u"};
    if (mode == FglMode::Hecke) names = {"t"};
  } else {
    if (mode == FglMode::Generic) names = {"c1", "c2"};
    if (mode == FglMode::Lorentz) names = {"s"};
    if (mode == FglMode::Hecke) names = {"t"};
  }
  f->first_root_var_ = static_cast<int>(names.size());
  const char* prefix = chart == Chart::Root ? "x" : "z";
  for (int g = 0; g < r; ++g) names.push_back(prefix + rs.label_string(g));
  if (names.size() > static_cast<std::size_t>(Monomial::kMaxVars)) {
    throw Error(ErrorKind::RegistryFull, "too many variables for " + rs.spec().name() + " in " + mode_name(mode) + " mode");
  }
  const int fr = f->first_root_var_;

  // denominators are factored over these
  std::vector<Poly> atoms;
  if (mode == FglMode::Hecke) atoms.push_back(monomial_poly(0, 2) + const_poly(1));
  if (chart == Chart::Root) {
    for (int g = 0; g < r; ++g) {
      Poly x = monomial_poly(fr + g);
      if (mode == FglMode::KTheory || mode == FglMode::Hecke) atoms.push_back(x - const_poly(1));
      if (mode == FglMode::Generic) atoms.push_back(monomial_poly(0) * x - const_poly(1));
    }
  } else {
    for (const auto& a : rs.positive_roots()) {
      Poly z = z_power(a, fr);
      atoms.push_back(z - const_poly(1));
      if (mode == FglMode::Hecke) {
        Poly t2 = monomial_poly(0, 2);
        atoms.push_back(t2 * z - const_poly(1));
        atoms.push_back(z - t2);
      }
      if (mode == FglMode::Lorentz) atoms.push_back(z + const_poly(1));
      if (mode == FglMode::Generic) {
        atoms.push_back(monomial_poly(0) - monomial_poly(1) * z);
        atoms.push_back(monomial_poly(0) * z - monomial_poly(1));
      }
    }
  }
  f->ring_ = Ring::create(names, atoms, config);
  const RingPtr& R = f->ring_;

  auto var = [&](int i) { return RatFunc::var(R, i); };
  RatFunc one = RatFunc::one(R);
  RatFunc zero = RatFunc::zero(R);
  if (mode == FglMode::Hecke) {
    f->t_ = var(0);
    f->tpi_ = f->t_ + f->t_.inverse();
  }
  if (chart == Chart::Root) {
    switch (mode) {
      case FglMode::Generic: f->mu1_ = var(0); f->mu2_ = var(1); break;
      case FglMode::Additive: f->mu1_ = zero; f->mu2_ = zero; break;
      case FglMode::KTheory: f->mu1_ = one; f->mu2_ = zero; break;
      case FglMode::Lorentz: f->mu1_ = zero; f->mu2_ = -var(0); break;
      case FglMode::Hecke: f->mu1_ = one; f->mu2_ = -(f->tpi_.pow(-2)); break;
    }
  } else {
    switch (mode) {
      case FglMode::Generic: f->c1_ = var(0); f->c2_ = var(1); break;
      case FglMode::KTheory: f->c1_ = one; f->c2_ = zero; break;
      case FglMode::Lorentz: f->c1_ = var(0); f->c2_ = -var(0); break;
      case FglMode::Hecke: {
        RatFunc d = (f->t_ * f->t_ + one).inverse();
        f->c1_ = d;
        f->c2_ = f->t_ * f->t_ * d;
        break;
      }
      case FglMode::Additive: break;
    }
    f->mu1_ = f->c1_ + f->c2_;
    f->mu2_ = -(f->c1_ * f->c2_);
  }
  f->u_ = -f->mu2_;

  const auto& pos = rs.positive_roots();
  for (const auto& a : pos) {
    RootVec na(a);
    for (auto& c : na) c = -c;
    f->y_pos_.push_back(f->y_of(a));
    f->y_neg_.push_back(f->y_of(na));
  }
  for (int g = 0; g < r; ++g) f->simple_index_.push_back(*rs.positive_index(rs.simple_root(g)));
  const std::size_t n = group->size();
  f->image_table_.resize(n * r * 2);
  for (WeylElem w = 0; w < n; ++w) {
    for (int i = 0; i < r; ++i) {
      RootVec img = group->simple_image(w, i);
      int k = *rs.positive_index(img);
      bool positive = RootSystem::is_positive(img);
      f->image_table_[(w * r + i) * 2 + 0] = positive ? &f->y_pos_[k] : &f->y_neg_[k];
      f->image_table_[(w * r + i) * 2 + 1] = positive ? &f->y_neg_[k] : &f->y_pos_[k];
    }
  }
  return f;
}

const RatFunc& FormalGroupAlgebra::t() const {
  if (mode_ != FglMode::Hecke) throw Error(ErrorKind::WrongMode, "t is only defined in Hecke mode");
  return t_;
}

const RatFunc& FormalGroupAlgebra::t_plus_inv() const {
  if (mode_ != FglMode::Hecke) throw Error(ErrorKind::WrongMode, "t is only defined in Hecke mode");
  return tpi_;
}

RatFunc FormalGroupAlgebra::fgl_add(const RatFunc& a, const RatFunc& b) const {
  RatFunc ab = a * b;
  RatFunc den = one() + mu2_ * ab;
  if (den.is_zero()) throw Error(ErrorKind::DegenerateDenominator, "1 + mu2*a*b vanishes");
  return (a + b - mu1_ * ab) / den;
}

RatFunc FormalGroupAlgebra::fgl_inverse(const RatFunc& a) const {
  RatFunc den = one() - mu1_ * a;
  if (den.is_zero()) throw Error(ErrorKind::DegenerateDenominator, "1 - mu1*a vanishes");
  return -a / den;
}

RatFunc FormalGroupAlgebra::y_exp(const RootVec& lambda) const {
  RootVec p(lambda.size()), q(lambda.size());
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    p[k] = std::max(lambda[k], 0);
    q[k] = std::max(-lambda[k], 0);
  }
  RatFunc z = RatFunc::from_fraction(ring_, z_power(p, first_root_var_), z_power(q, first_root_var_));
  return (one() - z) / (c1_ - c2_ * z);
}

RatFunc FormalGroupAlgebra::y_root_chart(const RootVec& lambda) const {
  RatFunc acc = zero();
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    RatFunc x = RatFunc::var(ring_, first_root_var_ + static_cast<int>(k));
    for (int e = 0; e < lambda[k]; ++e) acc = fgl_add(acc, x);
  }
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] >= 0) continue;
    RatFunc xi = fgl_inverse(RatFunc::var(ring_, first_root_var_ + static_cast<int>(k)));
    for (int e = 0; e < -lambda[k]; ++e) acc = fgl_add(acc, xi);
  }
  return acc;
}

RatFunc FormalGroupAlgebra::y_of(const RootVec& lambda) const {
  if (static_cast<int>(lambda.size()) != system().rank()) throw Error(ErrorKind::Parse, "wrong lattice dimension");
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
  }
  RatFunc y = chart_ == Chart::Exp ? y_exp(lambda) : y_root_chart(lambda);
  std::unique_lock lock(mutex_);
  memo_.emplace(lambda, y);
  return y;
}

const RatFunc& FormalGroupAlgebra::y_image(WeylElem w, int i, bool negative) const {
  return *image_table_[(static_cast<std::size_t>(w) * system().rank() + i) * 2 + (negative ? 1 : 0)];
}

const MonomialMap& FormalGroupAlgebra::monomial_map(WeylElem w) const {
  {
    std::shared_lock lock(mutex_);
    auto it = maps_.find(w);
    if (it != maps_.end()) return *it->second;
  }
  std::vector<MonomialMap::Exps> images(ring_->nvars());
  for (int v = 0; v < first_root_var_; ++v) {
    images[v].fill(0);
    images[v][v] = 1;
  }
  for (int j = 0; j < system().rank(); ++j) {
    auto& e = images[first_root_var_ + j];
    e.fill(0);
    RootVec img = group_->simple_image(w, j);
    for (int k = 0; k < system().rank(); ++k) e[first_root_var_ + k] = img[k];
  }
  auto m = std::make_unique<MonomialMap>(ring_, std::move(images));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = maps_.emplace(w, std::move(m));
  return *it->second;
}

const std::map<int, RatFunc>& FormalGroupAlgebra::bindings(WeylElem w) const {
  {
    std::shared_lock lock(mutex_);
    auto it = binds_.find(w);
    if (it != binds_.end()) return it->second;
  }
  std::map<int, RatFunc> b;
  for (int j = 0; j < system().rank(); ++j) b.emplace(first_root_var_ + j, y_image(w, j, false));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = binds_.emplace(w, std::move(b));
  return it->second;
}

RatFunc FormalGroupAlgebra::weyl_act(WeylElem w, const RatFunc& f) const {
  if (w == 0 || f.is_constant()) return f;
  if (chart_ == Chart::Exp) return monomial_map(w).apply(f);
  return substitute(f, bindings(w));
}

RatFunc FormalGroupAlgebra::kappa(int i) const { return y_neg_[simple_index_[i]].inverse() + x(i).inverse(); }

RatFunc FormalGroupAlgebra::parse(const std::string& text) const {
  ParseHooks hooks;
  hooks.symbol = [this](const std::string& name) -> std::optional<RatFunc> {
    if (ring_->vars().index_of(name) >= 0) return std::nullopt;
    if (name == "u") return u_;
    if (name == "mu1") return mu1_;
    if (name == "mu2") return mu2_;
    if (name == "t" && mode_ == FglMode::Hecke) return t_;
    return std::nullopt;
  };
  hooks.bracket = [this](const std::string& inner) { return y_of(system().parse_bracket(inner)); };
  return parse_ratfunc(ring_, text, hooks);
}

std::string FormalGroupAlgebra::render_bracket(const RatFunc& f) const {
  if (f.is_zero() || !system().has_epsilon()) return f.to_string();
  auto size_of = [](const RatFunc& g) {
    return g.numerator().total_degree() + g.denominator().total_degree();
  };
  RatFunc rest = f;
  std::vector<std::pair<std::string, int>> factors;
  const auto& pos = system().positive_roots();
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      RatFunc q = rest / y_neg_[k];
      if (size_of(q) < size_of(rest) && q.denominator().total_degree() <= rest.denominator().total_degree()) {
        RootVec na(pos[k]);
        for (auto& c : na) c = -c;
        std::string b = system().bracket(na);
        auto it = std::find_if(factors.begin(), factors.end(), [&](const auto& p) { return p.first == b; });
        if (it == factors.end()) factors.emplace_back(b, 1);
        else ++it->second;
        rest = q;
        progress = true;
      }
    }
  }
  const auto& pos_roots = system().positive_roots();
  if (rest.is_constant() && !factors.empty()) {
    BracketTerm t{rest.constant_value(), 0, std::vector<int>(pos_roots.size(), 0)};
    for (std::size_t k = 0; k < pos_roots.size(); ++k) {
      RootVec na(pos_roots[k]);
      for (auto& c : na) c = -c;
      for (const auto& [b, e] : factors)
        if (b == system().bracket(na)) t.exponents[k] = e;
    }
    return format_bracket_sum(*this, {t});
  }
  if (auto terms = expand_in_brackets(*this, f, 2 * static_cast<int>(pos_roots.size())))
    return format_bracket_sum(*this, *terms);
  if (factors.empty()) return f.to_string();
  std::string out;
  if (rest.is_one()) {
  } else if (rest == -one()) {
    out = "-";
  } else {
    std::string r = rest.to_string();
    bool simple = rest.is_constant() || rest.primitive_numerator().size() == 1;
    out = simple ? r + "*" : "(" + r + ")*";
  }
  std::sort(factors.begin(), factors.end());
  bool first = true;
  for (const auto& [b, e] : factors) {
    if (!first && !out.empty() && out.back() != '*' && out.back() != '-') out += "*";
    out += b;
    if (e > 1) out += "^" + std::to_string(e);
    first = false;
  }
  return out;
}

}  // namespace ellschub
