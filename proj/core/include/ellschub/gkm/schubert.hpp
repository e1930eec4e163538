#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ellschub/gkm/gkm_class.hpp"
#include "ellschub/hecke/hecke_algebra.hpp"
#include "ellschub/qw/twisted_algebra.hpp"

namespace ellschub {

// Classes in the GKM model. A class f has value f_w at w; Q_W acts by
// (h f)_w = sum_v (w q_v) f_{wv}, and zeta_{(i_1..i_l)} = Y_{i_l} ... Y_{i_1} zeta_empty.
class SchubertCalculus {
 public:
  explicit SchubertCalculus(FgaPtr fga, std::shared_ptr<KLTable> kl = nullptr);

  const FormalGroupAlgebra& fga() const noexcept { return *fga_; }
  const FgaPtr& fga_ptr() const noexcept { return fga_; }
  const WeylGroup& group() const noexcept { return fga_->group(); }
  const TwistedAlgebra& qw() const noexcept { return qw_; }
  const KLTable& kl() const;

  const GkmClass& point_class() const;
  GkmClass bott_samelson(const Word& word) const;

  // (t + 1/t)^{-l(w)} Gamma_{w^-1} zeta_empty; Hecke mode only.
  const GkmClass& kl_schubert(WeylElem w) const;
  // Same class through one Q_W element built from the tau expansion.
  GkmClass kl_schubert_reference(WeylElem w) const;
  // tau_v zeta_empty.
  const GkmClass& tau_class(WeylElem v) const;

  // Formula value prod_{beta > 0, s_beta v not <= w} y_{-beta} for v <= w, else 0.
  GkmClass smooth_class(WeylElem w) const;

 private:
  FgaPtr fga_;
  TwistedAlgebra qw_;
  std::shared_ptr<KLTable> kl_;
  mutable std::mutex mutex_;
  mutable std::optional<GkmClass> point_;
  mutable std::vector<std::unique_ptr<GkmClass>> tau_;
  mutable std::vector<std::unique_ptr<GkmClass>> kls_;
};

// Entrywise t -> 0 of a Hecke mode class, moved into the K-theory algebra
// `target` (same group and chart). Throws EvaluationPole.
GkmClass ktheory_limit(const GkmClass& c, const FgaPtr& target);

// rho_k: w -> [i_1 n] ... [i_{k-1} n] when n sits at position >= k of w, else 0.
// Type A_{n-1}: k >= 1. Type C_n: -(n-1) <= k <= n + 1 on the extended
// sequence i_{-(n-1)} ... i_0 i_1 ... i_n. Throws IndexOutOfRange, WrongType.
GkmClass rho(const FgaPtr& fga, int k);

// Rows: KL-Schubert classes S_w. Columns: Bott-Samelson classes zeta_{I_u}
// with I_u the shortlex word of u. S_w = sum_u m[w][u] zeta_{I_u}.
struct TransitionMatrix {
  std::vector<std::vector<RatFunc>> m;
};
TransitionMatrix transition_matrix(const SchubertCalculus& sc);

// Positivity certificate for the value of S_v at w: a finite sum of
// monomials in y_{-alpha} over positive roots alpha.
struct CertificateTerm {
  std::vector<RootVec> roots;  // positive roots, with multiplicity
  long coeff = 0;              // signed
  int u_power = 0;
  int k = 0;
};
struct PositivityCertificate {
  std::string kind = "kl_schubert";
  WeylElem v = 0;  // class index
  WeylElem w = 0;  // evaluation point
  std::vector<CertificateTerm> terms;
};
struct PositivityReport {
  bool sum_matches = false;
  bool pattern_ok = false;
  std::vector<std::string> messages;
  bool ok() const { return sum_matches && pattern_ok; }
};

// JSON: {"family", "rank", "class": {"kind", "index"}, "element",
//        "terms": [{"coeff", "u_power", "k", "roots": ["[-12]" | [1,1], ...]}]}
// Throws MalformedCertificate.
PositivityCertificate parse_certificate(const std::string& json_text, const FormalGroupAlgebra& fga);
PositivityReport verify_positivity(const PositivityCertificate& cert, const GkmClass& c);

enum class Display { Canonical, Bracket };
std::string render_value(const FormalGroupAlgebra& fga, const RatFunc& f, Display d);
// {"family", "rank", "mode", "class": {"kind", "index"}, "values": [{"element", "value"}]}
std::string class_to_json(const GkmClass& c, const std::string& kind, const std::string& index, Display d);
std::string class_to_text(const GkmClass& c, const std::string& kind, const std::string& index, Display d);

}  // namespace ellschub
