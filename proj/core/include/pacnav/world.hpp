#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pacnav/control.hpp"
#include "pacnav/params.hpp"
#include "pacnav/record.hpp"
#include "pacnav/types.hpp"

namespace pacnav {

struct Obstacle {
  Vec2 center;
  double radius = 0.0;  // > 0, disc "tree trunk"
};

struct Bounds {
  double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double area() const { return width() * height(); }
  bool contains(const Vec2& p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
};

/// What one agent perceives of the world at one instant.
struct Observation {
  std::vector<std::pair<int, Vec2>> neighbor_estimates;  // ascending by id
  std::vector<ObstaclePoint> obstacle_points;            // nearest boundary points
};

/// Ground-truth simulation state.
struct World {
  std::vector<UavState> agents;
  std::vector<AgentMemory> memories;  // memories[i] belongs to agents[i]
  std::vector<Obstacle> obstacles;
  Vec2 goal;
  int step_count = 0;
  Bounds bounds;
};

using Rng = std::mt19937_64;

/// Neighbors within sensing range (positions perturbed by sensing noise when
/// sigma_s > 0) plus the nearest boundary point of each obstacle in range.
Observation sense(const World& world, int agent_index, const Params& params, Rng& rng);

/// One synchronous two-phase step: every agent decides from the same pre-step
/// snapshot (sense, update histories, select target, compute command), then
/// all positions integrate simultaneously. Throws ContractViolationError if
/// the world is already terminal.
StepRecord step(World& world, const Params& params, Rng& rng);

RunStatus check_termination(const World& world, const Params& params);

/// Rejection-samples non-overlapping disc obstacles uniformly in bounds,
/// avoiding the keepout discs. Throws InvalidInputError when placement fails
/// repeatedly (infeasible density).
std::vector<Obstacle> generate_forest(double density, double radius_min, double radius_max,
                                      const std::vector<std::pair<Vec2, double>>& keepout,
                                      const Bounds& bounds, Rng& rng);

}  // namespace pacnav
