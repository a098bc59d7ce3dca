#include <benchmark/benchmark.h>

#include "apec/curve.hpp"

using namespace apec;

namespace {

WeierstrassCurve fixture() { return WeierstrassCurve::make(0, -7, 10); }

ECPoint pt(long x, long y) { return ECPoint::affine(Rational(x), Rational(y)); }

}  // namespace

// repeated addition: coordinate sizes grow quadratically with the multiple,
// so this doubles as a bignum stress test
static void AddChain(benchmark::State& state) {
  WeierstrassCurve c = fixture();
  ECPoint g = pt(-3, 2);
  const long chain = state.range(0);
  for (auto _ : state) {
    ECPoint acc = ECPoint::infinity();
    for (long i = 0; i < chain; ++i) acc = c.add(acc, g);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * chain);
}
BENCHMARK(AddChain)->RangeMultiplier(2)->Range(8, 128);

static void ScalarMul(benchmark::State& state) {
  WeierstrassCurve c = fixture();
  ECPoint g = pt(-3, 2);
  Integer k(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) {
    ECPoint r = c.scalar_mul(k, g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(ScalarMul)->RangeMultiplier(4)->Range(4, 1024);

static void LiftX(benchmark::State& state) {
  WeierstrassCurve c = fixture();
  Rational x(-3);
  for (auto _ : state) {
    auto fiber = c.lift_x(x);
    benchmark::DoNotOptimize(fiber);
  }
}
BENCHMARK(LiftX);

BENCHMARK_MAIN();
