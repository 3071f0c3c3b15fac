#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pacnav/record.hpp"
#include "pacnav/scenario.hpp"
#include "pacnav/world.hpp"

namespace pacnav {

struct RunResult {
  std::uint64_t seed = 0;
  RunStatus status;
  std::vector<StepRecord> records;
  RunSummary summary;
  std::vector<Obstacle> obstacles;  // as placed (explicit or generated)
};

/// Materializes the scenario's world for one seed: generates the forest (if
/// requested), resolves spawn points, and seats the agents. Consumes rng.
World build_world(const Scenario& scenario, Rng& rng);

/// Simulates to a terminal status. The run owns its rng, seeded with the
/// scenario seed unless overridden.
RunResult run_scenario(const Scenario& scenario,
                       std::optional<std::uint64_t> seed_override = std::nullopt);

struct BatchReport {
  struct Entry {
    std::uint64_t seed;
    RunSummary summary;
  };
  std::vector<Entry> runs;  // ascending by seed
  double success_rate = 0.0;
  std::optional<double> time_to_goal_mean;  // successes only, seconds
  std::optional<double> time_to_goal_std;
  std::optional<double> min_interagent_distance;
  std::optional<double> min_obstacle_clearance;
};

/// Aggregates computed the same way for cmd_batch and cmd_metrics.
BatchReport aggregate_summaries(const std::vector<BatchReport::Entry>& runs, double dt);

std::string batch_report_to_json(const BatchReport& report);

/// Runs seeds [seed_begin, seed_end] with up to `jobs` worker threads. Each
/// run is fully isolated (own world, rng, outputs); on_result is called from
/// the worker thread that finished the run.
BatchReport run_batch(const Scenario& scenario, std::uint64_t seed_begin,
                      std::uint64_t seed_end, int jobs,
                      const std::function<void(const RunResult&)>& on_result = nullptr);

}  // namespace pacnav
