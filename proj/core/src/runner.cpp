#include "pacnav/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include <json.hpp>

#include "pacnav/errors.hpp"

namespace pacnav {

namespace {

// Running aggregates folded over the trajectory.
struct SummaryTracker {
  explicit SummaryTracker(const World& world, const Params& params_)
      : params(params_),
        path_length(world.agents.size(), 0.0),
        time_to_goal(world.agents.size()),
        prev_positions(world.agents.size()) {
    for (std::size_t i = 0; i < world.agents.size(); ++i) {
      prev_positions[i] = world.agents[i].position;
    }
    if (!world.obstacles.empty()) {
      min_clearance = std::numeric_limits<double>::infinity();
    }
    observe(world);
  }

  void observe(const World& world) {
    const std::size_t n = world.agents.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& p = world.agents[i].position;
      path_length[i] += distance(p, prev_positions[i]);
      prev_positions[i] = p;
      for (std::size_t j = i + 1; j < n; ++j) {
        min_distance = std::min(min_distance, distance(p, world.agents[j].position));
      }
      for (const Obstacle& tree : world.obstacles) {
        min_clearance = std::min(*min_clearance,
                                 distance(p, tree.center) - tree.radius);
      }
      if (!time_to_goal[i] && distance(p, world.goal) <= params.goal_tolerance) {
        time_to_goal[i] = world.step_count * params.dt;
      }
    }
  }

  RunSummary finish(const World& world, const RunStatus& status) const {
    RunSummary s;
    s.status = status;
    s.steps = world.step_count;
    s.path_length = path_length;
    s.min_interagent_distance =
        world.agents.size() > 1 ? min_distance : 0.0;
    if (min_clearance) {
      s.min_obstacle_clearance = std::max(0.0, *min_clearance);
    }
    s.time_to_goal = time_to_goal;
    Vec2 centroid;
    for (const UavState& a : world.agents) {
      centroid += a.position;
    }
    centroid = centroid / static_cast<double>(world.agents.size());
    double radius = 0.0;
    for (const UavState& a : world.agents) {
      radius = std::max(radius, distance(a.position, centroid));
    }
    s.final_cohesion_radius = radius;
    return s;
  }

  const Params& params;
  std::vector<double> path_length;
  std::vector<std::optional<double>> time_to_goal;
  std::vector<Vec2> prev_positions;
  double min_distance = std::numeric_limits<double>::infinity();
  std::optional<double> min_clearance;
};

std::vector<Vec2> resolve_spawn_points(const Scenario& scenario,
                                       const std::vector<Obstacle>& obstacles, Rng& rng) {
  if (!scenario.spawn_points.empty()) {
    return scenario.spawn_points;
  }
  const Bounds& box = *scenario.spawn_box;
  const double separation = std::max(1.0, 2.0 * scenario.params.collision_distance);
  std::uniform_real_distribution<double> ux(box.xmin, box.xmax);
  std::uniform_real_distribution<double> uy(box.ymin, box.ymax);

  std::vector<Vec2> points;
  for (int i = 0; i < scenario.agent_count; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      const Vec2 p{ux(rng), uy(rng)};
      bool ok = true;
      for (const Vec2& q : points) {
        if (distance(p, q) < separation) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (const Obstacle& tree : obstacles) {
          if (distance(p, tree.center) < tree.radius + 0.5) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        points.push_back(p);
        placed = true;
      }
    }
    if (!placed) {
      throw InvalidInputError("could not place agents in the spawn box");
    }
  }
  return points;
}

}  // namespace

World build_world(const Scenario& scenario, Rng& rng) {
  World world;
  world.bounds = scenario.bounds;
  world.goal = scenario.goal;

  if (scenario.forest) {
    std::vector<std::pair<Vec2, double>> keepout;
    keepout.emplace_back(scenario.goal, scenario.params.goal_tolerance + 1.0);
    if (scenario.spawn_box) {
      const Bounds& box = *scenario.spawn_box;
      const Vec2 center{(box.xmin + box.xmax) / 2.0, (box.ymin + box.ymax) / 2.0};
      const double half_diag = std::hypot(box.width(), box.height()) / 2.0;
      keepout.emplace_back(center, half_diag + 0.5);
    }
    for (const Vec2& p : scenario.spawn_points) {
      keepout.emplace_back(p, 1.0);
    }
    world.obstacles = generate_forest(scenario.forest->density, scenario.forest->radius_min,
                                      scenario.forest->radius_max, keepout, scenario.bounds, rng);
  } else {
    world.obstacles = scenario.obstacles;
  }

  const std::vector<Vec2> spawn = resolve_spawn_points(scenario, world.obstacles, rng);
  for (int i = 0; i < scenario.agent_count; ++i) {
    UavState agent;
    agent.id = i;
    agent.position = spawn[static_cast<std::size_t>(i)];
    agent.informed = std::find(scenario.informed.begin(), scenario.informed.end(), i) !=
                     scenario.informed.end();
    world.agents.push_back(agent);
  }
  world.memories.resize(world.agents.size());
  return world;
}

RunResult run_scenario(const Scenario& scenario, std::optional<std::uint64_t> seed_override) {
  RunResult result;
  result.seed = seed_override.value_or(scenario.seed);
  Rng rng(result.seed);

  World world = build_world(scenario, rng);
  result.obstacles = world.obstacles;

  SummaryTracker tracker(world, scenario.params);
  RunStatus status = check_termination(world, scenario.params);
  while (!status.terminal()) {
    StepRecord rec = step(world, scenario.params, rng);
    tracker.observe(world);
    status = rec.status;
    result.records.push_back(std::move(rec));
  }
  result.status = status;
  result.summary = tracker.finish(world, status);
  return result;
}

BatchReport aggregate_summaries(const std::vector<BatchReport::Entry>& runs, double dt) {
  BatchReport report;
  report.runs = runs;
  std::sort(report.runs.begin(), report.runs.end(),
            [](const auto& a, const auto& b) { return a.seed < b.seed; });

  std::vector<double> success_times;
  for (const auto& entry : report.runs) {
    const RunSummary& s = entry.summary;
    if (s.status.kind == RunStatus::Kind::Success) {
      success_times.push_back(s.steps * dt);
    }
    if (!report.min_interagent_distance ||
        s.min_interagent_distance < *report.min_interagent_distance) {
      report.min_interagent_distance = s.min_interagent_distance;
    }
    if (s.min_obstacle_clearance &&
        (!report.min_obstacle_clearance ||
         *s.min_obstacle_clearance < *report.min_obstacle_clearance)) {
      report.min_obstacle_clearance = s.min_obstacle_clearance;
    }
  }
  if (!report.runs.empty()) {
    report.success_rate =
        static_cast<double>(success_times.size()) / static_cast<double>(report.runs.size());
  }
  if (!success_times.empty()) {
    double mean = 0.0;
    for (double t : success_times) {
      mean += t;
    }
    mean /= static_cast<double>(success_times.size());
    double var = 0.0;
    for (double t : success_times) {
      var += (t - mean) * (t - mean);
    }
    var /= static_cast<double>(success_times.size());
    report.time_to_goal_mean = mean;
    report.time_to_goal_std = std::sqrt(var);
  }
  return report;
}

std::string batch_report_to_json(const BatchReport& report) {
  using nlohmann::json;
  json runs = json::array();
  for (const auto& entry : report.runs) {
    runs.push_back({{"seed", entry.seed},
                    {"summary", json::parse(run_summary_to_json(entry.summary))}});
  }
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  const json j = {{"aggregates",
                   {{"success_rate", report.success_rate},
                    {"time_to_goal_mean", opt(report.time_to_goal_mean)},
                    {"time_to_goal_std", opt(report.time_to_goal_std)},
                    {"min_interagent_distance", opt(report.min_interagent_distance)},
                    {"min_obstacle_clearance", opt(report.min_obstacle_clearance)}}},
                  {"runs", runs}};
  return j.dump(2) + "\n";
}

BatchReport run_batch(const Scenario& scenario, std::uint64_t seed_begin,
                      std::uint64_t seed_end, int jobs,
                      const std::function<void(const RunResult&)>& on_result) {
  if (seed_end < seed_begin) {
    throw InvalidInputError("run_batch: empty seed range");
  }
  const std::size_t count = static_cast<std::size_t>(seed_end - seed_begin) + 1;
  std::vector<BatchReport::Entry> entries(count);
  std::atomic<std::size_t> next{0};

  const int workers = std::clamp(jobs, 1, static_cast<int>(count));
  auto work = [&] {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= count) {
        return;
      }
      const std::uint64_t seed = seed_begin + idx;
      RunResult result = run_scenario(scenario, seed);
      entries[idx] = {seed, result.summary};
      if (on_result) {
        on_result(result);
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) {
      pool.emplace_back(work);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  return aggregate_summaries(entries, scenario.params.dt);
}

}  // namespace pacnav
