#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ellschub/hecke/laurent.hpp"
#include "ellschub/roots/weyl_group.hpp"

namespace ellschub {

// Element of the Hecke algebra in the tau basis.
class HeckeElem {
 public:
  HeckeElem() = default;
  static HeckeElem basis(WeylElem w, const LaurentT& c = LaurentT(1));

  bool is_zero() const noexcept { return c_.empty(); }
  LaurentT coeff(WeylElem w) const;
  const std::map<WeylElem, LaurentT>& terms() const noexcept { return c_; }
  void add(WeylElem w, const LaurentT& c);

  HeckeElem operator-() const;
  HeckeElem& operator+=(const HeckeElem& o);
  HeckeElem& operator-=(const HeckeElem& o);
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  friend HeckeElem operator*(const LaurentT& c, const HeckeElem& h);
  friend bool operator==(const HeckeElem& a, const HeckeElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HeckeElem& a, const HeckeElem& b) { return !(a == b); }

 private:
  std::map<WeylElem, LaurentT> c_;
};

// tau_i^2 = (t^-1 - t) tau_i + 1.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(WeylGroupPtr group);

  const WeylGroup& group() const noexcept { return *group_; }
  const WeylGroupPtr& group_ptr() const noexcept { return group_; }

  HeckeElem one() const { return HeckeElem::basis(group_->identity()); }
  HeckeElem tau(WeylElem w) const { return HeckeElem::basis(w); }
  HeckeElem mul_gen(const HeckeElem& h, int i) const;       // h * tau_i
  HeckeElem lmul_gen(int i, const HeckeElem& h) const;      // tau_i * h
  HeckeElem mul(const HeckeElem& a, const HeckeElem& b) const;
  HeckeElem bar(const HeckeElem& h) const;
  const HeckeElem& bar_tau(WeylElem w) const;

  std::string to_string(const HeckeElem& h) const;

 private:
  WeylGroupPtr group_;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<HeckeElem>> bar_tau_;
};

std::string format_qpoly(const std::vector<Int>& p, const std::string& var = "q");

// Kazhdan-Lusztig basis gamma_w = tau_w + sum_{v<w} t pi_{v,w}(t) tau_v and the
// polynomials P_{v,w}(q), q = t^-2 in the tau coordinates.
class KLTable {
 public:
  explicit KLTable(std::shared_ptr<const HeckeAlgebra> hecke);

  const HeckeAlgebra& hecke() const noexcept { return *hecke_; }
  const WeylGroup& group() const noexcept { return hecke_->group(); }

  const HeckeElem& kl_basis(WeylElem w) const;
  // Coefficients of P_{v,w} in increasing powers of q. Throws NotComparable.
  std::vector<Int> kl_polynomial(WeylElem v, WeylElem w) const;
  Int mu(WeylElem z, WeylElem v) const;
  bool rationally_smooth(WeylElem w) const;
  void compute_all() const;

  // Cache file: header "# ellschub-kltable v1 family=F rank=R", then lines
  // "v_word;w_word;p0,p1,..." with words in labels and "e" for the identity.
  void save(const std::string& path) const;
  // Loads entries into the table; returns false when the file is missing.
  // Throws Cache on a malformed file or a family/rank mismatch.
  bool load(const std::string& path);
  static std::string default_file_name(const CartanSpec& spec);

 private:
  const HeckeElem& compute(WeylElem w) const;

  std::shared_ptr<const HeckeAlgebra> hecke_;
  mutable std::recursive_mutex mutex_;
  mutable std::vector<std::optional<HeckeElem>> gamma_;
};

}  // namespace ellschub
