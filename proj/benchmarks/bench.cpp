#include "eth2game/equilibrium.hpp"
#include "eth2game/incentive.hpp"
#include "eth2game/simulator.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace eth2game;

void BM_derive_rewards(benchmark::State& state) {
  const IncentiveParams params;
  for (auto _ : state) {
    RewardTable table = derive_rewards(params);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_derive_rewards);

void BM_expected_utility(benchmark::State& state) {
  GameConfig cfg;
  cfg.n_agents = static_cast<std::size_t>(state.range(0));
  const StrategyProfile profile = StrategyProfile::uniform(
      cfg.n_agents, Strategy{Rational(3, 4), Rational(2, 3)});
  for (auto _ : state) {
    ExpectedUtility eu = expected_utility(0, profile, cfg);
    benchmark::DoNotOptimize(eu);
  }
}
BENCHMARK(BM_expected_utility)->Arg(4)->Arg(8)->Arg(16);

void BM_dominance_classes(benchmark::State& state) {
  GameConfig cfg;
  cfg.n_agents = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    EquilibriumReport rep =
        verify_ex_ante_dominance(cfg, EnumerationMode::Classes);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_dominance_classes)->Arg(4)->Arg(12)->Arg(64);

void BM_dominance_brute(benchmark::State& state) {
  GameConfig cfg;
  cfg.n_agents = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    EquilibriumReport rep =
        verify_ex_ante_dominance(cfg, EnumerationMode::BruteForce);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_dominance_brute)->Arg(4)->Arg(10);

void BM_simulation(benchmark::State& state) {
  const GameConfig cfg;
  const StrategyProfile profile = StrategyProfile::uniform(
      4, Strategy{Rational(99, 100), Rational(9, 10)});
  const std::size_t epochs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SimulationResult r = run_simulation(cfg, profile, epochs, 42);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(
      static_cast<std::int64_t>(state.iterations()) *
      static_cast<std::int64_t>(epochs * cfg.incentives.network.slots_per_epoch));
}
BENCHMARK(BM_simulation)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
