#include <benchmark/benchmark.h>

#include <random>

#include "pacnav/metrics.hpp"
#include "pacnav/runner.hpp"
#include "pacnav/world.hpp"

using namespace pacnav;

namespace {

PathHistory random_history(std::mt19937_64& rng, int points) {
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  PathHistory h(32);
  Vec2 p{0, 0};
  for (int i = 0; i < points; ++i) {
    h.update(p, 0.45);
    const double a = angle(rng);
    p += Vec2{std::cos(a), std::sin(a)};
  }
  return h;
}

void bm_path_persistence(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const PathHistory h = random_history(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(path_persistence(h));
  }
}
BENCHMARK(bm_path_persistence)->Arg(5)->Arg(20);

World make_world(int agents) {
  Scenario sc;
  sc.bounds = {0, 0, 70, 30};
  sc.agent_count = agents;
  sc.informed = {0};
  sc.spawn_box = Bounds{2, 2, 28, 28};
  sc.goal = {60, 15};
  Rng rng(1);
  return build_world(sc, rng);
}

void bm_world_step(benchmark::State& state) {
  const Params params;
  World world = make_world(static_cast<int>(state.range(0)));
  Rng rng(1);
  for (auto _ : state) {
    if (check_termination(world, params).terminal()) {
      state.PauseTiming();
      world = make_world(static_cast<int>(state.range(0)));
      state.ResumeTiming();
    }
    benchmark::DoNotOptimize(step(world, params, rng));
  }
}
BENCHMARK(bm_world_step)->Arg(5)->Arg(20)->Arg(50);

void bm_full_run(benchmark::State& state) {
  Scenario sc;
  sc.bounds = {0, 0, 70, 30};
  sc.agent_count = 5;
  sc.informed = {0};
  sc.spawn_box = Bounds{5, 10, 15, 20};
  sc.goal = {60, 15};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scenario(sc, 7));
  }
}
BENCHMARK(bm_full_run)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
