#include "swarmlab/metrics.hpp"
#include "swarmlab/runner.hpp"

#include <benchmark/benchmark.h>

using namespace swarmlab;

namespace {

SwarmState make_state(int n) {
  DynamicsParams p;
  p.k = 3;
  p.sih_radius = 8.0;
  p.noise_eta = 0.05;
  return init_population(n, p, Topology::random_density(0.3), 42);
}

}  // namespace

static void BM_Step(benchmark::State& state) {
  auto s = make_state(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    step(s);
    benchmark::DoNotOptimize(s.agents.front().x.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Step)->Arg(50)->Arg(200)->Arg(800)->Complexity();

static void BM_EffectiveNeighbors(benchmark::State& state) {
  auto s = make_state(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (int i = 0; i < s.agent_count(); ++i) {
      auto nb = effective_neighbors(s, i);
      benchmark::DoNotOptimize(nb.data());
    }
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EffectiveNeighbors)->Arg(50)->Arg(200)->Arg(800)->Complexity();

static void BM_Metrics(benchmark::State& state) {
  auto s = make_state(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(polarization(s));
    benchmark::DoNotOptimize(velocity_diameter(s));
    benchmark::DoNotOptimize(participation_ratio(s));
    benchmark::DoNotOptimize(mean_degree_fraction(s));
  }
}
BENCHMARK(BM_Metrics)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
