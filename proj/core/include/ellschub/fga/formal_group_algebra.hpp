#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ellschub/ring/ratfunc.hpp"
#include "ellschub/roots/weyl_group.hpp"

namespace ellschub {

enum class FglMode { Generic, Additive, KTheory, Lorentz, Hecke };

const char* mode_name(FglMode m);
FglMode parse_mode(const std::string& s);

// Coordinates used for the formal group algebra.
//   Root: variables x_i = y_{alpha_i}; y_lambda is built with the group law.
//   Exp:  variables z_i = e^{alpha_i}; y_lambda = (1 - z^lambda)/(c1 - c2 z^lambda)
//         with mu1 = c1 + c2, mu2 = -c1*c2. Weyl group elements act by
//         monomial substitutions. Not available for the additive law.
enum class Chart { Root, Exp };

const char* chart_name(Chart c);
Chart parse_chart(const std::string& s);

class FormalGroupAlgebra;
using FgaPtr = std::shared_ptr<const FormalGroupAlgebra>;

class FormalGroupAlgebra {
 public:
  static FgaPtr create(WeylGroupPtr group, FglMode mode, Chart chart = Chart::Root, RingConfig config = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const WeylGroup& group() const noexcept { return *group_; }
  const WeylGroupPtr& group_ptr() const noexcept { return group_; }
  const RootSystem& system() const noexcept { return group_->system(); }
  FglMode mode() const noexcept { return mode_; }
  Chart chart() const noexcept { return chart_; }

  const RatFunc& mu1() const noexcept { return mu1_; }
  const RatFunc& mu2() const noexcept { return mu2_; }
  const RatFunc& u() const noexcept { return u_; }
  // Hecke mode only.
  const RatFunc& t() const;
  const RatFunc& t_plus_inv() const;  // t + 1/t

  RatFunc zero() const { return RatFunc::zero(ring_); }
  RatFunc one() const { return RatFunc::one(ring_); }
  RatFunc constant(long c) const { return RatFunc::constant(ring_, c); }

  RatFunc fgl_add(const RatFunc& a, const RatFunc& b) const;
  RatFunc fgl_inverse(const RatFunc& a) const;

  // y_lambda for lambda in the root lattice (simple-root coordinates).
  RatFunc y_of(const RootVec& lambda) const;
  // y_{+-beta} for the k-th positive root.
  const RatFunc& y_pos(int k) const { return y_pos_[k]; }
  const RatFunc& y_neg(int k) const { return y_neg_[k]; }
  // y_{w(sign * alpha_i)}.
  const RatFunc& y_image(WeylElem w, int i, bool negative) const;
  RatFunc x(int i) const { return y_pos_[simple_index_[i]]; }

  RatFunc weyl_act(WeylElem w, const RatFunc& f) const;
  RatFunc kappa(int i) const;

  // Expressions in ring variables, u, mu1, mu2, t, and bracket symbols such
  // as [13] or [-12] standing for y of the corresponding root.
  RatFunc parse(const std::string& text) const;
  // Product of brackets when f factors that way, else the canonical string.
  std::string render_bracket(const RatFunc& f) const;

  FormalGroupAlgebra(const FormalGroupAlgebra&) = delete;
  FormalGroupAlgebra& operator=(const FormalGroupAlgebra&) = delete;

 private:
  FormalGroupAlgebra() = default;
  RatFunc y_exp(const RootVec& lambda) const;
  RatFunc y_root_chart(const RootVec& lambda) const;
  const MonomialMap& monomial_map(WeylElem w) const;
  const std::map<int, RatFunc>& bindings(WeylElem w) const;

  WeylGroupPtr group_;
  FglMode mode_ = FglMode::Generic;
  Chart chart_ = Chart::Root;
  RingPtr ring_;
  int first_root_var_ = 0;
  RatFunc mu1_, mu2_, u_, t_, tpi_, c1_, c2_;
  std::vector<int> simple_index_;
  std::vector<RatFunc> y_pos_, y_neg_;
  std::vector<const RatFunc*> image_table_;  // (w, i, sign) -> y

  mutable std::shared_mutex mutex_;
  mutable std::map<RootVec, RatFunc> memo_;
  mutable std::map<WeylElem, std::unique_ptr<MonomialMap>> maps_;
  mutable std::map<WeylElem, std::map<int, RatFunc>> binds_;
};

}  // namespace ellschub
