#include <benchmark/benchmark.h>

#include "koch/billiard.hpp"
#include "koch/compatibility.hpp"
#include "koch/prefractal.hpp"
#include "koch/ternary.hpp"

namespace {

void BM_BuildPrefractal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(koch::build_prefractal(n));
}
BENCHMARK(BM_BuildPrefractal)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

// Bounces of the midpoint seed carried to KS_n; one iteration = one bounce.
void BM_BilliardStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p0 = koch::cached_prefractal(0);
  const auto seed = koch::make_initial_condition(*p0, koch::BoundaryPoint{0, 0, koch::make_rational(1, 2)},
                                                 koch::Direction::exact(koch::LatticeVector(2, 1)));
  const auto seq = koch::build_sequence(seed, n);
  const auto p = koch::cached_prefractal(n);
  koch::FootprintPoint state_now = seq.at(n).orbit.footprint.front();
  for (auto _ : state) {
    auto next = koch::billiard_step(*p, state_now);
    state_now = std::get<koch::FootprintPoint>(next);
  }
  state.counters["bounces/s"] = benchmark::Counter(static_cast<double>(state.iterations()),
                                                   benchmark::Counter::kIsRate);
}
BENCHMARK(BM_BilliardStep)->Arg(3)->Arg(5)->Arg(6);

void BM_RunOrbit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p0 = koch::cached_prefractal(0);
  const auto seed = koch::make_initial_condition(*p0, koch::BoundaryPoint{0, 0, koch::make_rational(1, 2)},
                                                 koch::Direction::exact(koch::LatticeVector(2, 1)));
  const auto init = *koch::build_sequence(seed, n).at(n).initial;
  const auto p = koch::cached_prefractal(n);
  for (auto _ : state) benchmark::DoNotOptimize(koch::run_orbit(*p, init));
}
BENCHMARK(BM_RunOrbit)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const koch::Rational t = koch::make_rational(1093, 3 * 6561 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(koch::classify(t));
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
