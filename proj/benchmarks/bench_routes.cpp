#include "swarmlab/astar.hpp"
#include "swarmlab/fleet_sim.hpp"
#include "swarmlab/harness/presets.hpp"

#include <benchmark/benchmark.h>

using namespace swarmlab::roads;

namespace {

// Square grid with unit spacing and a few diagonal shortcuts.
RoadNetwork grid_network(int side) {
  RoadNetwork net;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) net.add_node(c, r);
  auto id = [side](int r, int c) { return r * side + c; };
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      if (c + 1 < side) net.add_edge(id(r, c), id(r, c + 1), 1.0);
      if (r + 1 < side) net.add_edge(id(r, c), id(r + 1, c), 1.0);
      if (r + 1 < side && c + 1 < side && (r + c) % 3 == 0)
        net.add_edge(id(r, c), id(r + 1, c + 1), 1.4142135623730951);
    }
  return net;
}

}  // namespace

static void BM_AStarGrid(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto net = grid_network(side);
  const Perceive all = [](const RoadEdge&) { return true; };
  for (auto _ : state) {
    auto plan = astar_route(net, 0, side * side - 1, all);
    benchmark::DoNotOptimize(plan->cost);
  }
  state.SetComplexityN(side * side);
}
BENCHMARK(BM_AStarGrid)->Arg(10)->Arg(20)->Arg(40)->Complexity();

static void BM_FleetTick(benchmark::State& state) {
  auto sc = swarmlab::harness::presets::fork_scenario(0.1, 0.5, 40);
  sc.horizon = 1e9;  // tick manually
  FleetSim sim(sc);
  for (auto _ : state) {
    sim.tick();
    benchmark::DoNotOptimize(sim.time());
  }
}
BENCHMARK(BM_FleetTick);

static void BM_FleetScenario(benchmark::State& state) {
  for (auto _ : state) {
    auto sc = swarmlab::harness::presets::fork_scenario(0.1, 0.5, 40);
    sc.seed = 7;
    FleetSim sim(std::move(sc));
    auto res = sim.run();
    benchmark::DoNotOptimize(res.counts.destroyed);
  }
}
BENCHMARK(BM_FleetScenario);

BENCHMARK_MAIN();
