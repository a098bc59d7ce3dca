#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "apec/ap_search.hpp"

using namespace apec;

namespace {

// planted progressions inside random noise, the realistic workload
std::vector<Rational> workload(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-4 * static_cast<long>(n),
                                          4 * static_cast<long>(n));
  std::uniform_int_distribution<long> den(1, 8);
  std::vector<Rational> xs;
  xs.reserve(n);
  for (std::size_t i = 0; i < n / 8 + 4; ++i)
    xs.emplace_back(Rational(static_cast<long>(i)) * Rational(3, 2) + Rational(5));
  while (xs.size() < n) xs.emplace_back(num(rng), den(rng));
  return xs;
}

}  // namespace

static void LongestAp(benchmark::State& state) {
  auto xs = workload(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) {
    ApTriple t = longest_ap(xs);
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(LongestAp)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

static void AllMaximalAps(benchmark::State& state) {
  auto xs = workload(static_cast<std::size_t>(state.range(0)), 43);
  for (auto _ : state) {
    auto aps = all_maximal_aps(xs, 3);
    benchmark::DoNotOptimize(aps);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(AllMaximalAps)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

BENCHMARK_MAIN();
