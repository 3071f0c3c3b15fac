#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pacnav/params.hpp"
#include "pacnav/world.hpp"

namespace pacnav {

/// Scenario constraint violation: names the field and the reason.
struct ScenarioError : Error {
  ScenarioError(const std::string& field_, const std::string& reason);
  std::string field;
};

struct ForestSpec {
  double density = 0.0;  // trees per square meter
  double radius_min = 0.0;
  double radius_max = 0.0;
};

/// A fully validated run configuration.
struct Scenario {
  Bounds bounds;
  std::vector<Obstacle> obstacles;       // explicit, XOR forest
  std::optional<ForestSpec> forest;
  int agent_count = 0;
  std::vector<int> informed;             // non-empty, subset of [0, count)
  std::vector<Vec2> spawn_points;        // explicit, XOR spawn_box
  std::optional<Bounds> spawn_box;
  Vec2 goal;
  Params params;
  std::uint64_t seed = 0;
};

/// Parses and validates a scenario document. Unknown keys are rejected.
/// Throws ConfigParseError (syntax) or ScenarioError (constraints).
Scenario parse_scenario(const std::string& text);

Scenario load_scenario_file(const std::string& path);

}  // namespace pacnav
