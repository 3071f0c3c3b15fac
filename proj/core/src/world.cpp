#include "pacnav/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pacnav/errors.hpp"
#include "pacnav/selection.hpp"

namespace pacnav {

Observation sense(const World& world, int agent_index, const Params& params, Rng& rng) {
  const UavState& self = world.agents.at(static_cast<std::size_t>(agent_index));
  Observation obs;

  std::normal_distribution<double> noise(0.0, params.sensing_noise);
  for (const UavState& other : world.agents) {  // ascending by id
    if (other.id == self.id) {
      continue;
    }
    if (distance(other.position, self.position) > params.sensing_range) {
      continue;
    }
    Vec2 estimate = other.position;
    if (params.sensing_noise > 0.0) {
      estimate.x += noise(rng);
      estimate.y += noise(rng);
    }
    obs.neighbor_estimates.emplace_back(other.id, estimate);
  }

  for (const Obstacle& tree : world.obstacles) {
    const Vec2 to_center = tree.center - self.position;
    const double center_dist = to_center.norm();
    if (center_dist - tree.radius > params.sensing_range) {
      continue;
    }
    Vec2 boundary_point;
    if (center_dist < 1e-12) {
      // Agent at the disc center; any boundary direction is equally near.
      boundary_point = tree.center + Vec2{tree.radius, 0.0};
    } else {
      boundary_point = tree.center - to_center * (tree.radius / center_dist);
    }
    obs.obstacle_points.push_back({boundary_point, false});
  }
  return obs;
}

StepRecord step(World& world, const Params& params, Rng& rng) {
  if (check_termination(world, params).terminal()) {
    throw ContractViolationError("step called on a terminal world");
  }

  const std::size_t n = world.agents.size();
  std::vector<Vec2> commands(n);
  std::vector<TargetRef> targets(n);

  // Phase 1: every agent decides from the same pre-step snapshot.
  for (std::size_t i = 0; i < n; ++i) {
    UavState& self = world.agents[i];
    AgentMemory& mem = world.memories[i];
    const Observation obs = sense(world, static_cast<int>(i), params, rng);

    std::vector<Vec2> neighbor_points;
    neighbor_points.reserve(obs.neighbor_estimates.size());
    for (const auto& [id, estimate] : obs.neighbor_estimates) {
      auto it = mem.histories.try_emplace(id, PathHistory(params.history_capacity)).first;
      it->second.update(estimate, params.history_gate);
      neighbor_points.push_back(estimate);
    }

    const TargetRef target = select_target(mem, self, world.goal, params);

    std::vector<ObstaclePoint> avoid_points = obs.obstacle_points;
    for (const Vec2& p : neighbor_points) {
      avoid_points.push_back({p, true});
    }

    const Vec2 nav = navigation_vector(self, target, neighbor_points, world.goal, params);
    const Vec2 avoid = avoidance_vector(self.position, avoid_points, self.prev_command, params);
    commands[i] = compose_command(nav, avoid, params.v_max);
    targets[i] = target;
  }

  // Phase 2: all agents move simultaneously.
  for (std::size_t i = 0; i < n; ++i) {
    world.agents[i].position += commands[i] * params.dt;
    world.agents[i].prev_command = commands[i];
    world.memories[i].prev_command = commands[i];
    world.memories[i].prev_target = targets[i];
  }
  world.step_count += 1;

  StepRecord rec;
  rec.step = world.step_count;
  for (std::size_t i = 0; i < n; ++i) {
    rec.agents.push_back({world.agents[i].id, world.agents[i].position, commands[i],
                          world.agents[i].informed, targets[i]});
  }
  rec.status = check_termination(world, params);
  return rec;
}

RunStatus check_termination(const World& world, const Params& params) {
  const std::size_t n = world.agents.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(world.agents[i].position, world.agents[j].position) <
          params.collision_distance) {
        return RunStatus::collision("agents " + std::to_string(world.agents[i].id) + " and " +
                                    std::to_string(world.agents[j].id));
      }
    }
    for (const Obstacle& tree : world.obstacles) {
      if (distance(world.agents[i].position, tree.center) < tree.radius) {
        return RunStatus::collision("agent " + std::to_string(world.agents[i].id) +
                                    " hit an obstacle");
      }
    }
  }
  bool all_at_goal = true;
  for (const UavState& a : world.agents) {
    if (distance(a.position, world.goal) > params.goal_tolerance) {
      all_at_goal = false;
      break;
    }
  }
  if (all_at_goal) {
    return RunStatus::success();
  }
  if (world.step_count >= params.max_steps) {
    return RunStatus::timeout();
  }
  return RunStatus::running();
}

std::vector<Obstacle> generate_forest(double density, double radius_min, double radius_max,
                                      const std::vector<std::pair<Vec2, double>>& keepout,
                                      const Bounds& bounds, Rng& rng) {
  if (density < 0.0 || radius_min <= 0.0 || radius_max < radius_min) {
    throw InvalidInputError("generate_forest: bad density or radius range");
  }
  const auto count = static_cast<std::size_t>(density * bounds.area());
  std::vector<Obstacle> trees;
  trees.reserve(count);
  if (count == 0) {
    return trees;
  }

  std::uniform_real_distribution<double> ux(bounds.xmin, bounds.xmax);
  std::uniform_real_distribution<double> uy(bounds.ymin, bounds.ymax);
  std::uniform_real_distribution<double> ur(radius_min, radius_max);

  const std::size_t max_attempts = 1000 * count;
  std::size_t attempts = 0;
  while (trees.size() < count) {
    if (attempts++ >= max_attempts) {
      throw InvalidInputError("generate_forest: could not place trees (density infeasible)");
    }
    const Obstacle tree{{ux(rng), uy(rng)}, ur(rng)};
    bool rejected = false;
    for (const auto& [center, radius] : keepout) {
      if (distance(tree.center, center) < tree.radius + radius) {
        rejected = true;
        break;
      }
    }
    if (!rejected) {
      for (const Obstacle& placed : trees) {
        if (distance(tree.center, placed.center) < tree.radius + placed.radius) {
          rejected = true;
          break;
        }
      }
    }
    if (!rejected) {
      trees.push_back(tree);
    }
  }
  return trees;
}

}  // namespace pacnav
