#include <benchmark/benchmark.h>

#include "ellschub/gkm/schubert.hpp"
#include "ellschub/hecke/hecke_algebra.hpp"
#include "ellschub/qw/twisted_algebra.hpp"

using namespace ellschub;

namespace {

FgaPtr make(Family f, int r, FglMode m, Chart c) { return FormalGroupAlgebra::create(WeylGroup::build(CartanSpec{f, r}), m, c); }

void BM_GroupLawAssociativity(benchmark::State& state) {
  auto S = make(Family::A, 3, FglMode::Generic, Chart::Root);
  for (auto _ : state) {
    RatFunc a = S->x(0), b = S->x(1), c = S->x(2);
    benchmark::DoNotOptimize(S->fgl_add(a, S->fgl_add(b, c)) == S->fgl_add(S->fgl_add(a, b), c));
  }
}
BENCHMARK(BM_GroupLawAssociativity)->Unit(benchmark::kMicrosecond);

void BM_KLTable(benchmark::State& state, Family f, int r) {
  auto G = WeylGroup::build(CartanSpec{f, r});
  for (auto _ : state) {
    KLTable kl(std::make_shared<HeckeAlgebra>(G));
    kl.compute_all();
    benchmark::DoNotOptimize(kl.kl_basis(G->longest()));
  }
}
BENCHMARK_CAPTURE(BM_KLTable, A3, Family::A, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_KLTable, C3, Family::C, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_KLTable, A4, Family::A, 4)->Unit(benchmark::kMillisecond);

void BM_BottSamelsonLongest(benchmark::State& state, Family f, int r, FglMode m, Chart c) {
  auto S = make(f, r, m, c);
  for (auto _ : state) {
    SchubertCalculus sc(S);
    benchmark::DoNotOptimize(sc.bott_samelson(sc.group().word(sc.group().longest())));
  }
}
BENCHMARK_CAPTURE(BM_BottSamelsonLongest, A3_hecke_root, Family::A, 3, FglMode::Hecke, Chart::Root)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BottSamelsonLongest, A3_hecke_exp, Family::A, 3, FglMode::Hecke, Chart::Exp)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BottSamelsonLongest, A3_lorentz_root, Family::A, 3, FglMode::Lorentz, Chart::Root)->Unit(benchmark::kMillisecond);

void BM_KlSchubertAll(benchmark::State& state, Family f, int r, Chart c) {
  auto S = make(f, r, FglMode::Hecke, c);
  for (auto _ : state) {
    SchubertCalculus sc(S);
    for (WeylElem w = 0; w < sc.group().size(); ++w) benchmark::DoNotOptimize(sc.kl_schubert(w));
  }
}
BENCHMARK_CAPTURE(BM_KlSchubertAll, C2_root, Family::C, 2, Chart::Root)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_KlSchubertAll, A3_exp, Family::A, 3, Chart::Exp)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_KlSchubertAll, C3_exp, Family::C, 3, Chart::Exp)->Unit(benchmark::kMillisecond);

void BM_QwSquare(benchmark::State& state) {
  TwistedAlgebra Q(make(Family::G2, 2, FglMode::Generic, Chart::Exp));
  for (auto _ : state) {
    QWElem Y = Q.pushpull_Y(0);
    benchmark::DoNotOptimize(Q.qw_mul(Y, Y));
  }
}
BENCHMARK(BM_QwSquare)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
