#include <benchmark/benchmark.h>

#include "apec/construct.hpp"
#include "apec/enumerate.hpp"

using namespace apec;

namespace {

ECPoint pt(long x, long y) { return ECPoint::affine(Rational(x), Rational(y)); }

}  // namespace

static void BuildHexic(benchmark::State& state) {
  CubicPoly f{Rational(0), Rational(-7), Rational(10)};
  Rational a(2), b(-3);
  for (auto _ : state) {
    HexicPoly g = build_hexic(f, a, b);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BuildHexic);

static void CertifySquarefree(benchmark::State& state) {
  HexicPoly g = build_hexic(CubicPoly{Rational(0), Rational(-7), Rational(10)},
                            Rational(2), Rational(-3));
  for (auto _ : state) {
    SquarefreeResult r = is_squarefree(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(CertifySquarefree);

static void ResultantCrossCheck(benchmark::State& state) {
  Poly g = build_hexic(CubicPoly{Rational(0), Rational(-7), Rational(10)},
                       Rational(2), Rational(-3))
               .poly();
  Poly dg = g.derivative();
  for (auto _ : state) {
    Rational r = Poly::resultant(g, dg);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(ResultantCrossCheck);

// the exact-arithmetic hot path: combination enumeration over the fixture
// generators, coordinate sizes ballooning with the bound
static void EnumeratePoints(benchmark::State& state) {
  WeierstrassCurve c = WeierstrassCurve::make(0, -7, 10);
  GeneratorSet gs = GeneratorSet::make(
      c, {pt(-3, 2), pt(-1, 4), pt(1, 2)}, {ECPoint::infinity()});
  EnumConfig cfg;
  cfg.coeff_bound = static_cast<std::uint32_t>(state.range(0));
  cfg.size_cap = 1 << 16;
  for (auto _ : state) {
    EnumResult r = enumerate_points(gs, cfg);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(EnumeratePoints)->DenseRange(1, 3);

BENCHMARK_MAIN();
