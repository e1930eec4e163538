#include "ellschub/gkm/schubert.hpp"

#include <algorithm>
#include <sstream>

#include "ellschub/errors.hpp"
#include "json.hpp"
#include "ellschub/roots/combinatorics.hpp"

namespace ellschub {

SchubertCalculus::SchubertCalculus(FgaPtr fga, std::shared_ptr<KLTable> kl)
    : fga_(std::move(fga)), qw_(fga_), kl_(std::move(kl)), tau_(fga_->group().size()), kls_(fga_->group().size()) {
  if (!kl_) kl_ = std::make_shared<KLTable>(std::make_shared<HeckeAlgebra>(fga_->group_ptr()));
}

const KLTable& SchubertCalculus::kl() const { return *kl_; }

const GkmClass& SchubertCalculus::point_class() const {
  std::lock_guard lock(mutex_);
  if (!point_) {
    RatFunc p = fga_->one();
    for (std::size_t k = 0; k < fga_->system().num_positive(); ++k) p *= fga_->y_neg(static_cast<int>(k));
    point_.emplace(fga_);
    point_->set(group().identity(), p);
  }
  return *point_;
}

GkmClass SchubertCalculus::bott_samelson(const Word& word) const {
  GkmClass f = point_class();
  for (int i : word) {
    if (i < 0 || i >= group().rank()) throw Error(ErrorKind::InvalidWord, "generator index out of range");
    f = qw_.apply_Y(i, f);
  }
  return f;
}

const GkmClass& SchubertCalculus::tau_class(WeylElem v) const {
  fga_->t();  // Hecke mode check
  {
    std::lock_guard lock(mutex_);
    if (tau_[v]) return *tau_[v];
  }
  const WeylGroup& G = group();
  GkmClass out = point_class();
  if (v != G.identity()) {
    const int i = G.word(v).front();
    out = qw_.apply_tau(i, tau_class(G.lmul(i, v)));
  }
  std::lock_guard lock(mutex_);
  if (!tau_[v]) tau_[v] = std::make_unique<GkmClass>(std::move(out));
  return *tau_[v];
}

const GkmClass& SchubertCalculus::kl_schubert(WeylElem w) const {
  const RatFunc& t = fga_->t();
  {
    std::lock_guard lock(mutex_);
    if (kls_[w]) return *kls_[w];
  }
  const WeylGroup& G = group();
  const HeckeElem& gamma = kl_->kl_basis(G.inverse(w));
  GkmClass acc(fga_);
  for (const auto& [v, c] : gamma.terms()) acc += tau_class(v).scaled(c.evaluate(t));
  acc = acc.scaled(fga_->t_plus_inv().pow(-G.length(w)));
  std::lock_guard lock(mutex_);
  if (!kls_[w]) kls_[w] = std::make_unique<GkmClass>(std::move(acc));
  return *kls_[w];
}

GkmClass SchubertCalculus::kl_schubert_reference(WeylElem w) const {
  const WeylGroup& G = group();
  QWElem h = fga_->t_plus_inv().pow(-G.length(w)) * qw_.from_hecke(kl_->kl_basis(G.inverse(w)));
  return qw_.act_on_gkm(h, point_class());
}

GkmClass SchubertCalculus::smooth_class(WeylElem w) const {
  const WeylGroup& G = group();
  const auto& roots = fga_->system().positive_roots();
  std::vector<WeylElem> refl;
  for (const auto& b : roots) refl.push_back(G.reflection(b));
  GkmClass out(fga_);
  for (WeylElem v = 0; v < G.size(); ++v) {
    if (!G.bruhat_leq(v, w)) continue;
    RatFunc p = fga_->one();
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (!G.bruhat_leq(G.mul(refl[k], v), w)) p *= fga_->y_neg(static_cast<int>(k));
    }
    out.set(v, p);
  }
  return out;
}

GkmClass ktheory_limit(const GkmClass& c, const FgaPtr& target) {
  const FormalGroupAlgebra& src = *c.fga();
  if (src.mode() != FglMode::Hecke) throw Error(ErrorKind::WrongMode, "the K-theory limit needs a Hecke mode class");
  if (target->mode() != FglMode::KTheory || target->chart() != src.chart() ||
      target->system().spec().name() != src.system().spec().name())
    throw Error(ErrorKind::ModeMismatch, "target must be the K-theory algebra of the same system and chart");
  const int tv = src.ring()->vars().require("t");
  GkmClass out(target);
  for (WeylElem w = 0; w < c.size(); ++w) out.set(w, transport(eval_at(c.at(w), tv, mpq_class(0)), target->ring()));
  return out;
}

namespace {

RatFunc bracket_value(const FormalGroupAlgebra& S, int i, int j) {
  return S.y_of(S.system().parse_bracket("[" + std::to_string(i) + "," + std::to_string(j) + "]"));
}

}  // namespace

GkmClass rho(const FgaPtr& fga, int k) {
  const FormalGroupAlgebra& S = *fga;
  const WeylGroup& G = S.group();
  const Family f = S.system().family();
  GkmClass out(fga);
  if (f == Family::A) {
    const int n = G.rank() + 1;
    if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "rho index must be >= 1 in type A");
    for (WeylElem w = 0; w < G.size(); ++w) {
      const auto& win = G.window(w);
      const int pos = static_cast<int>(std::find(win.begin(), win.end(), n) - win.begin()) + 1;
      if (pos < k) continue;
      RatFunc p = S.one();
      for (int j = 1; j < k; ++j) p *= bracket_value(S, win[j - 1], n);
      out.set(w, p);
    }
    return out;
  }
  if (f == Family::C) {
    const int n = G.rank();
    if (k < -(n - 1) || k > n + 1)
      throw Error(ErrorKind::IndexOutOfRange, "rho index must lie in [-(n-1), n+1] in type C");
    for (WeylElem w = 0; w < G.size(); ++w) {
      const auto& win = G.window(w);
      if (extended_position_of_n(win) < k) continue;
      RatFunc p = S.one();
      for (int j = -(n - 1); j < k; ++j) p *= bracket_value(S, extended_entry(win, j), n);
      out.set(w, p);
    }
    return out;
  }
  throw Error(ErrorKind::WrongType, "rho functions are defined for types A and C");
}

TransitionMatrix transition_matrix(const SchubertCalculus& sc) {
  const WeylGroup& G = sc.group();
  const auto& Q = sc.qw();
  std::map<WeylElem, Word> basis;
  for (WeylElem v = 0; v < G.size(); ++v) {
    Word w = G.word(G.inverse(v));
    std::reverse(w.begin(), w.end());
    basis.emplace(v, w);
  }
  TransitionMatrix tm;
  tm.m.assign(G.size(), std::vector<RatFunc>(G.size(), sc.fga().zero()));
  for (WeylElem w = 0; w < G.size(); ++w) {
    QWElem h = sc.fga().t_plus_inv().pow(-G.length(w)) * Q.from_hecke(sc.kl().kl_basis(G.inverse(w)));
    for (const auto& [v, c] : Q.expand_in_Y_basis(h, basis)) tm.m[w][G.inverse(v)] = c;
  }
  return tm;
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Certificate, "malformed certificate: " + what); }

RootVec parse_cert_root(const nlohmann::json& r, const FormalGroupAlgebra& S) {
  const RootSystem& R = S.system();
  RootVec alpha;
  if (r.is_string()) {
    RootVec lam;
    try {
      lam = R.parse_bracket(r.get<std::string>());
    } catch (const Error& e) {
      malformed(e.what());
    }
    // the bracket names y_{-alpha}
    for (int x : lam) alpha.push_back(-x);
  } else if (r.is_array()) {
    for (const auto& x : r) {
      if (!x.is_number_integer()) malformed("root coordinates must be integers");
      alpha.push_back(x.get<int>());
    }
  } else {
    malformed("a root must be a bracket string or a coordinate list");
  }
  if (static_cast<int>(alpha.size()) != R.rank() || !R.is_root(alpha) || !RootSystem::is_positive(alpha))
    malformed("monomial factors must be y_{-alpha} with alpha a positive root");
  return alpha;
}

}  // namespace

PositivityCertificate parse_certificate(const std::string& json_text, const FormalGroupAlgebra& S) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    malformed(e.what());
  }
  if (!j.is_object()) malformed("top level must be an object");
  const WeylGroup& G = S.group();
  PositivityCertificate cert;
  try {
    if (j.contains("family") && parse_family(j.at("family").get<std::string>()) != S.system().family())
      malformed("family does not match");
    if (j.contains("rank") && j.at("rank").get<int>() != G.rank()) malformed("rank does not match");
    const auto& cls = j.at("class");
    cert.kind = cls.at("kind").get<std::string>();
    if (cert.kind != "kl_schubert" && cert.kind != "bott_samelson" && cert.kind != "smooth")
      malformed("unknown class kind " + cert.kind);
    cert.v = G.parse(cls.at("index").get<std::string>());
    cert.w = G.parse(j.at("element").get<std::string>());
    const auto& terms = j.at("terms");
    if (!terms.is_array() || terms.empty()) malformed("terms must be a nonempty array");
    for (const auto& t : terms) {
      CertificateTerm term;
      if (!t.at("coeff").is_number_integer() || !t.at("u_power").is_number_integer() || !t.at("k").is_number_integer())
        malformed("coeff, u_power and k must be integers");
      term.coeff = t.at("coeff").get<long>();
      term.u_power = t.at("u_power").get<int>();
      term.k = t.at("k").get<int>();
      if (!t.at("roots").is_array()) malformed("roots must be an array");
      for (const auto& r : t.at("roots")) term.roots.push_back(parse_cert_root(r, S));
      cert.terms.push_back(std::move(term));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Certificate) throw;
    malformed(e.what());
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  return cert;
}

PositivityReport verify_positivity(const PositivityCertificate& cert, const GkmClass& c) {
  const FormalGroupAlgebra& S = *c.fga();
  const WeylGroup& G = S.group();
  const int N = static_cast<int>(S.system().num_positive());
  const int lo = N - G.length(cert.v);
  PositivityReport rep;
  rep.pattern_ok = true;
  RatFunc sum = S.zero();
  for (std::size_t n = 0; n < cert.terms.size(); ++n) {
    const auto& t = cert.terms[n];
    const int m = static_cast<int>(t.roots.size());
    auto fail = [&](const std::string& why) {
      rep.pattern_ok = false;
      rep.messages.push_back("term " + std::to_string(n + 1) + ": " + why);
    };
    if (t.coeff == 0) fail("coefficient is zero");
    if (t.k < lo || t.k > m) fail("k outside [N - l(v), m]");
    if ((m - t.k) % 2 != 0) fail("m - k is odd");
    else if (t.u_power != (m - t.k) / 2) fail("u power differs from (m - k)/2");
    const bool negative = ((t.k - lo) % 2 + 2) % 2 == 1;
    if (t.coeff != 0 && (t.coeff < 0) != negative) fail("sign differs from (-1)^(k - (N - l(v)))");
    RatFunc mono = S.constant(t.coeff) * S.u().pow(t.u_power);
    for (const auto& a : t.roots) {
      RootVec neg;
      for (int x : a) neg.push_back(-x);
      mono *= S.y_of(neg);
    }
    sum += mono;
  }
  rep.sum_matches = (sum == c.at(cert.w));
  if (!rep.sum_matches) rep.messages.push_back("sum of monomials differs from the class value");
  return rep;
}

std::string render_value(const FormalGroupAlgebra& fga, const RatFunc& f, Display d) {
  return d == Display::Bracket ? fga.render_bracket(f) : f.to_string();
}

namespace {

std::string element_name(const WeylGroup& G, WeylElem w) { return w == G.identity() ? "id" : G.format(w); }

}  // namespace

std::string class_to_json(const GkmClass& c, const std::string& kind, const std::string& index, Display d) {
  const FormalGroupAlgebra& S = *c.fga();
  const WeylGroup& G = S.group();
  nlohmann::ordered_json j;
  j["family"] = family_name(S.system().family());
  j["rank"] = G.rank();
  j["mode"] = mode_name(S.mode());
  j["class"] = {{"kind", kind}, {"index", index}};
  j["values"] = nlohmann::ordered_json::array();
  for (WeylElem w = 0; w < c.size(); ++w) {
    j["values"].push_back({{"element", element_name(G, w)}, {"value", render_value(S, c.at(w), d)}});
  }
  return j.dump(2);
}

std::string class_to_text(const GkmClass& c, const std::string& kind, const std::string& index, Display d) {
  const FormalGroupAlgebra& S = *c.fga();
  const WeylGroup& G = S.group();
  std::ostringstream os;
  os << kind << " " << index << " in " << S.system().spec().name() << " (" << mode_name(S.mode()) << ")\n";
  for (WeylElem w = 0; w < c.size(); ++w) os << "  " << element_name(G, w) << ": " << render_value(S, c.at(w), d) << "\n";
  return os.str();
}

}  // namespace ellschub
