#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ellschub/fga/formal_group_algebra.hpp"
#include "ellschub/gkm/gkm_class.hpp"
#include "ellschub/hecke/hecke_algebra.hpp"

namespace ellschub {

// sum_v q_v delta_v in the twisted group algebra Q_W.
class QWElem {
 public:
  QWElem() = default;
  explicit QWElem(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return c_.empty(); }
  RatFunc coeff(WeylElem w) const;
  const std::map<WeylElem, RatFunc>& terms() const noexcept { return c_; }
  void add(WeylElem w, const RatFunc& q);

  QWElem operator-() const;
  QWElem& operator+=(const QWElem& o);
  QWElem& operator-=(const QWElem& o);
  friend QWElem operator+(QWElem a, const QWElem& b) { return a += b; }
  friend QWElem operator-(QWElem a, const QWElem& b) { return a -= b; }
  friend QWElem operator*(const RatFunc& q, const QWElem& h);  // left scalar
  friend bool operator==(const QWElem& a, const QWElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QWElem& a, const QWElem& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::map<WeylElem, RatFunc> c_;
};

// Products h1 h2 act as h1 after h2.
class TwistedAlgebra {
 public:
  explicit TwistedAlgebra(FgaPtr fga);

  const FormalGroupAlgebra& fga() const noexcept { return *fga_; }
  const FgaPtr& fga_ptr() const noexcept { return fga_; }
  const WeylGroup& group() const noexcept { return fga_->group(); }

  QWElem zero() const { return QWElem(fga_->ring()); }
  QWElem delta(WeylElem w) const;
  QWElem scalar(const RatFunc& q) const;
  QWElem qw_mul(const QWElem& a, const QWElem& b) const;

  QWElem demazure_X(int i) const;  // (1/x_i)(delta_i - 1)
  QWElem pushpull_Y(int i) const;  // 1/x_{-i} + (1/x_i) delta_i
  QWElem tau(int i) const;         // (t + 1/t) Y_i - t; Hecke mode only

  // Left-to-right product gen(i_1) ... gen(i_l); delta_id for the empty word.
  QWElem word_product(const std::function<QWElem(int)>& gen, const Word& word) const;
  QWElem y_word(const Word& word) const;
  // Image of a Hecke algebra element under tau_i -> tau(i); Hecke mode only.
  QWElem from_hecke(const HeckeElem& h) const;

  // Coefficients c_v with h = sum_v c_v Y_{I_v}.
  std::map<WeylElem, RatFunc> expand_in_Y_basis(const QWElem& h, const std::map<WeylElem, Word>& basis_words) const;
  std::map<WeylElem, Word> shortlex_basis() const;

  GkmClass act_on_gkm(const QWElem& h, const GkmClass& f) const;
  // Same as act_on_gkm with Y_i and tau_i.
  GkmClass apply_Y(int i, const GkmClass& f) const;
  GkmClass apply_tau(int i, const GkmClass& f) const;

  std::string to_string(const QWElem& h) const;

 private:
  FgaPtr fga_;
};

}  // namespace ellschub
