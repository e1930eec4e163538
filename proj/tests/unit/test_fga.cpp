#include <gtest/gtest.h>

#include <random>

#include "ellschub/errors.hpp"
#include "ellschub/fga/bracket_expansion.hpp"
#include "ellschub/fga/formal_group_algebra.hpp"

using namespace ellschub;

namespace {

FgaPtr fga(Family f, int r, FglMode m, Chart c = Chart::Root) {
  return FormalGroupAlgebra::create(WeylGroup::build(CartanSpec{f, r}), m, c);
}

std::vector<std::pair<FglMode, Chart>> all_modes() {
  return {{FglMode::Generic, Chart::Root}, {FglMode::Additive, Chart::Root}, {FglMode::KTheory, Chart::Root},
          {FglMode::Lorentz, Chart::Root}, {FglMode::Hecke, Chart::Root},    {FglMode::Generic, Chart::Exp},
          {FglMode::KTheory, Chart::Exp},  {FglMode::Lorentz, Chart::Exp},   {FglMode::Hecke, Chart::Exp}};
}

}  // namespace

TEST(Fga, GroupLawAxiomsGeneric) {
  auto S = fga(Family::A, 3, FglMode::Generic);
  RatFunc a = S->x(0), b = S->x(1), c = S->x(2);
  EXPECT_EQ(S->fgl_add(a, b), S->fgl_add(b, a));
  EXPECT_EQ(S->fgl_add(a, S->zero()), a);
  EXPECT_EQ(S->fgl_add(a, S->fgl_add(b, c)), S->fgl_add(S->fgl_add(a, b), c));
}

TEST(Fga, MultiplicativeLaw) {
  auto S = fga(Family::A, 2, FglMode::KTheory);
  RatFunc a = S->x(0), b = S->x(1);
  EXPECT_EQ(S->fgl_add(a, b), a + b - a * b);
  EXPECT_EQ(S->fgl_inverse(a), a / (a - S->one()));
}

TEST(Fga, LorentzInverse) {
  auto S = fga(Family::A, 2, FglMode::Lorentz);
  EXPECT_EQ(S->fgl_inverse(S->x(0)), -S->x(0));
}

TEST(Fga, InverseCancelsInEveryMode) {
  for (auto [m, c] : all_modes()) {
    auto S = fga(Family::A, 2, m, c);
    RatFunc a = S->x(0);
    EXPECT_TRUE(S->fgl_add(a, S->fgl_inverse(a)).is_zero()) << mode_name(m);
    EXPECT_TRUE(S->y_of({0, 0}).is_zero());
    EXPECT_EQ(S->y_of({-1, 0}), S->fgl_inverse(S->x(0))) << mode_name(m) << chart_name(c);
  }
}

TEST(Fga, SimpleRootsAreVariables) {
  auto S = fga(Family::C, 2, FglMode::Hecke);
  EXPECT_EQ(S->y_of({1, 0}), RatFunc::var(S->ring(), "x0"));
  EXPECT_EQ(S->y_of({0, 1}), RatFunc::var(S->ring(), "x1"));
}

TEST(Fga, HeckeAdditionFormula) {
  for (auto c : {Chart::Root, Chart::Exp}) {
    auto S = fga(Family::A, 2, FglMode::Hecke, c);
    RatFunc ya = S->y_of({1, 0}), yb = S->y_of({0, 1}), yab = S->y_of({1, 1});
    EXPECT_EQ(yab, ya + yb - ya * yb + S->u() * ya * yb * yab);
    EXPECT_EQ(S->u(), S->t_plus_inv().pow(-2));
  }
}

TEST(Fga, LemmaIdentitiesHecke) {
  for (auto c : {Chart::Root, Chart::Exp}) {
    auto A = fga(Family::A, 2, FglMode::Hecke, c);
    RatFunc ya = A->y_of({1, 0}), yb = A->y_of({0, 1}), yab = A->y_of({1, 1}), yna = A->y_of({-1, 0});
    EXPECT_EQ(yab / ya + yb / yna, A->one() + A->u() * yb * yab);
    // C2: alpha = alpha_1 short, beta = alpha_0 long, 2 alpha + beta a root
    auto C = fga(Family::C, 2, FglMode::Hecke, c);
    RatFunc a = C->y_of({0, 1}), b = C->y_of({1, 0}), ab = C->y_of({1, 1}), a2b = C->y_of({1, 2}),
            na = C->y_of({0, -1});
    EXPECT_EQ(a2b / a + b / na, C->constant(2) - ab + C->u() * ab * (b + a2b));
  }
}

TEST(Fga, KappaValues) {
  for (int i = 0; i < 2; ++i) {
    auto S = fga(Family::A, 2, FglMode::Generic);
    EXPECT_EQ(S->kappa(i), S->mu1());
    EXPECT_TRUE(fga(Family::A, 2, FglMode::Hecke)->kappa(i).is_one());
    EXPECT_TRUE(fga(Family::A, 2, FglMode::Hecke, Chart::Exp)->kappa(i).is_one());
    EXPECT_TRUE(fga(Family::A, 2, FglMode::Additive)->kappa(i).is_zero());
    auto G = fga(Family::G2, 2, FglMode::Generic, Chart::Exp);
    EXPECT_EQ(G->kappa(i), G->mu1());
  }
}

TEST(Fga, WeylActionExamples) {
  auto S = fga(Family::A, 2, FglMode::Generic);
  RatFunc f = S->x(0) / (S->x(1) + S->one());
  EXPECT_EQ(S->weyl_act(0, f), f);
  WeylElem s1 = S->group().generator(0);
  EXPECT_EQ(S->weyl_act(s1, S->x(0)), S->fgl_inverse(S->x(0)));
  EXPECT_EQ(S->weyl_act(s1, S->x(1)), S->y_of({1, 1}));
}

TEST(Fga, WeylActionIsGroupAction) {
  std::mt19937 rng(11);
  std::vector<CartanSpec> specs{{Family::A, 2}, {Family::C, 2}, {Family::G2, 2}, {Family::A, 3}, {Family::C, 3}};
  int done = 0;
  for (const auto& spec : specs) {
    for (auto [m, c] : {std::pair{FglMode::Hecke, Chart::Exp}, std::pair{FglMode::Generic, Chart::Exp},
                        std::pair{FglMode::KTheory, Chart::Root}, std::pair{FglMode::Lorentz, Chart::Root}}) {
      auto S = FormalGroupAlgebra::create(WeylGroup::build(spec), m, c);
      const auto& G = S->group();
      for (int trial = 0; trial < 5; ++trial) {
        WeylElem w = rng() % G.size(), v = rng() % G.size();
        RatFunc f = S->x(rng() % G.rank()) + S->constant(rng() % 3) * S->x(rng() % G.rank()) * S->x(0);
        f = f / (S->x(rng() % G.rank()) + S->constant(2));
        EXPECT_EQ(S->weyl_act(v, S->weyl_act(w, f)), S->weyl_act(G.mul(v, w), f)) << spec.name();
        ++done;
      }
    }
  }
  EXPECT_GE(done, 100);
}

TEST(Fga, WeylActionMatchesRootImages) {
  for (auto c : {Chart::Root, Chart::Exp}) {
    auto S = fga(Family::C, 2, FglMode::Hecke, c);
    const auto& G = S->group();
    for (WeylElem w = 0; w < G.size(); ++w) {
      for (const auto& a : S->system().positive_roots()) {
        EXPECT_EQ(S->weyl_act(w, S->y_of(a)), S->y_of(G.act(w, a)));
      }
    }
  }
}

TEST(Fga, YIsLatticeHomomorphism) {
  std::mt19937 rng(5);
  std::vector<CartanSpec> specs{{Family::A, 1}, {Family::A, 2}, {Family::C, 2}, {Family::G2, 2}, {Family::A, 3}, {Family::C, 3}};
  for (const auto& spec : specs) {
    for (auto [m, c] : {std::pair{FglMode::Lorentz, Chart::Root}, std::pair{FglMode::Hecke, Chart::Exp},
                        std::pair{FglMode::Generic, Chart::Exp}}) {
      auto S = FormalGroupAlgebra::create(WeylGroup::build(spec), m, c);
      const int r = spec.rank;
      for (int trial = 0; trial < 50; ++trial) {
        RootVec l(r), n(r), s(r);
        for (int k = 0; k < r; ++k) {
          l[k] = static_cast<int>(rng() % 3) - 1;
          n[k] = static_cast<int>(rng() % 3) - 1;
          s[k] = l[k] + n[k];
        }
        EXPECT_EQ(S->y_of(s), S->fgl_add(S->y_of(l), S->y_of(n))) << spec.name() << " " << format_root(l) << format_root(n);
      }
    }
  }
}

TEST(Fga, Brackets) {
  auto S = fga(Family::A, 2, FglMode::Hecke);
  EXPECT_EQ(S->parse("[13]"), S->y_of({-1, -1}));
  EXPECT_EQ(S->parse("1 + u[13][23]"), S->one() + S->u() * S->y_of({-1, -1}) * S->y_of({0, -1}));
  RatFunc pt = S->parse("[12][13][23]");
  EXPECT_EQ(S->render_bracket(pt), "[12][13][23]");
  auto C = fga(Family::C, 2, FglMode::Additive);
  EXPECT_EQ(C->parse("[-11]"), C->y_of({-1, 0}));
  EXPECT_EQ(C->render_bracket(C->parse("2*[-12]^2")), "2[-12]^2");
  EXPECT_THROW(S->parse("[14]"), Error);
}

TEST(Fga, BracketExpansion) {
  auto S = fga(Family::A, 2, FglMode::Hecke);
  RatFunc f = S->one() + S->u() * S->y_of({-1, -1}) * S->y_of({0, -1});
  EXPECT_EQ(S->render_bracket(f), "1 + u[13][23]");
  auto terms = expand_in_brackets(*S, f, 6);
  ASSERT_TRUE(terms.has_value());
  EXPECT_EQ(terms->size(), 2u);
  EXPECT_EQ(bracket_sum_value(*S, *terms), f);
  EXPECT_EQ(S->render_bracket(S->zero()), "0");
  EXPECT_EQ(S->render_bracket(S->parse("-[12]/3")), "-1/3[12]");
}

TEST(Fga, BracketRenderRoundTrip) {
  for (auto [fam, r] : {std::pair{Family::A, 2}, {Family::C, 2}, {Family::B, 2}}) {
    for (auto [m, c] : all_modes()) {
      auto S = fga(fam, r, m, c);
      std::vector<RatFunc> samples = {S->y_neg(0) * S->y_neg(1) - S->y_neg(2),
                                      S->u() * S->y_neg(0).pow(2) + S->y_neg(1) + S->one(),
                                      S->kappa(0), S->x(0) + S->x(1)};
      for (const auto& f : samples) {
        std::string text = S->render_bracket(f);
        EXPECT_EQ(S->parse(text), f) << text;
      }
    }
  }
}

TEST(Fga, ModeErrors) {
  EXPECT_THROW(fga(Family::A, 2, FglMode::Additive, Chart::Exp), Error);
  try {
    fga(Family::A, 2, FglMode::Generic)->t();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongMode);
  }
  EXPECT_EQ(parse_mode("multiplicative"), FglMode::KTheory);
  EXPECT_THROW(parse_mode("elliptic"), Error);
}
