#include <benchmark/benchmark.h>

#include "g2tk/bessel.hpp"
#include "g2tk/g2_lie.hpp"
#include "g2tk/local_zeta.hpp"
#include "g2tk/whittaker.hpp"

using namespace g2tk;

static void BM_Bracket(benchmark::State& state) {
  G2Element x = g2_v(1) + g2_delta(3) * GaussianRational(frac(2, 3));
  G2Element y = g2_E(1, 3) + g2_u(2);
  for (auto _ : state) {
    G2Element z = bracket(x, y);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_Bracket);

static void BM_JacobiSweep(benchmark::State& state) {
  for (auto _ : state) {
    bool ok = true;
    for (int i = 0; i < kG2Dim; ++i)
      for (int j = 0; j < kG2Dim; ++j)
        for (int k = 0; k < kG2Dim; ++k) {
          G2Element s = bracket(g2_basis(i), bracket(g2_basis(j), g2_basis(k))) +
                        bracket(g2_basis(j), bracket(g2_basis(k), g2_basis(i))) +
                        bracket(g2_basis(k), bracket(g2_basis(i), g2_basis(j)));
          ok &= s.is_zero();
        }
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_JacobiSweep)->Unit(benchmark::kMillisecond);

static void BM_SubringEnum(benchmark::State& state) {
  BinaryCubic f = sample_form(5, SplittingType::kSplit);
  int max_val = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rings = subring_enum(f, 5, max_val);
    benchmark::DoNotOptimize(rings);
  }
  state.SetComplexityN(max_val);
}
BENCHMARK(BM_SubringEnum)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CridentClass(benchmark::State& state) {
  BinaryCubic f = sample_form(5, SplittingType::kSplit);
  LatticeClass h = canonical_class(5, diag2(Rational(25), Rational(25)));
  for (auto _ : state) {
    CridentResult r = verify_crident(h, SplittingType::kSplit, f);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CridentClass)->Unit(benchmark::kMicrosecond);

static void BM_BesselK(benchmark::State& state) {
  double nu = static_cast<double>(state.range(0));
  double x = 0.7;
  for (auto _ : state) {
    double v = bessel_k(nu, x);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_BesselK)->Arg(0)->Arg(3)->Arg(12);

static void BM_SchmidResiduals(benchmark::State& state) {
  WVector w = parse_wvector("0,1,-1,0");
  WhittakerParams p{2, w, 0.1, 1.3, 0.7};
  for (auto _ : state) {
    OdeReport r = ode_residuals(p, 1e-4);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SchmidResiduals)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
