#include "pacnav/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pacnav/config.hpp"

namespace pacnav {

ScenarioError::ScenarioError(const std::string& field_, const std::string& reason)
    : Error(field_ + ": " + reason), field(field_) {}

namespace {

const std::set<std::string> kKnownKeys = {
    "world.bounds",     "world.obstacles", "world.forest",    "swarm.count",
    "swarm.informed",   "swarm.spawn_points", "swarm.spawn_box", "goal",
    "seed",
    "params.V_m",       "params.K_n",      "params.K_c",      "params.R_f",
    "params.R_o",       "params.R_o_agent", "params.R_s",     "params.R_c",
    "params.L",         "params.delta_min", "params.theta_ex", "params.v_max",
    "params.dt",        "params.T_max",    "params.R_g",      "params.d_col",
    "params.sigma_s",
};

double number_at(const ConfigValue& v, const std::string& field) {
  if (!v.is_number()) {
    throw ScenarioError(field, "expected a number");
  }
  return v.as_number();
}

int integer_at(const ConfigValue& v, const std::string& field) {
  const double d = number_at(v, field);
  if (d != std::floor(d)) {
    throw ScenarioError(field, "expected an integer");
  }
  return static_cast<int>(d);
}

std::vector<double> number_array(const ConfigValue& v, const std::string& field,
                                 std::size_t expected = 0) {
  if (!v.is_array()) {
    throw ScenarioError(field, "expected an array");
  }
  std::vector<double> out;
  for (const ConfigValue& item : v.as_array()) {
    out.push_back(number_at(item, field));
  }
  if (expected != 0 && out.size() != expected) {
    throw ScenarioError(field, "expected " + std::to_string(expected) + " numbers");
  }
  return out;
}

Bounds bounds_from(const ConfigValue& v, const std::string& field) {
  const auto nums = number_array(v, field, 4);
  Bounds b{nums[0], nums[1], nums[2], nums[3]};
  if (b.xmax <= b.xmin || b.ymax <= b.ymin) {
    throw ScenarioError(field, "max corner must exceed min corner");
  }
  return b;
}

Vec2 vec_from(const ConfigValue& v, const std::string& field) {
  const auto nums = number_array(v, field, 2);
  return {nums[0], nums[1]};
}

void apply_params(const ConfigDocument& doc, Params& p) {
  auto num = [&doc](const char* key, double& out) {
    if (const auto it = doc.find(std::string("params.") + key); it != doc.end()) {
      out = number_at(it->second, it->first);
    }
  };
  num("V_m", p.v_min_ratio);
  num("K_n", p.nav_gain);
  num("K_c", p.avoid_gain);
  num("R_f", p.cohesion_radius);
  num("R_s", p.sensing_range);
  num("R_c", p.proximity_radius);
  num("delta_min", p.history_gate);
  num("theta_ex", p.exclusion_angle);
  num("v_max", p.v_max);
  num("dt", p.dt);
  num("R_g", p.goal_tolerance);
  num("d_col", p.collision_distance);
  num("sigma_s", p.sensing_noise);
  num("R_o", p.avoid_radius);
  if (const auto it = doc.find("params.R_o_agent"); it != doc.end()) {
    p.avoid_radius_agent = number_at(it->second, it->first);
  } else {
    p.avoid_radius_agent = p.avoid_radius;  // follows R_o unless set explicitly
  }
  if (const auto it = doc.find("params.L"); it != doc.end()) {
    p.history_capacity = integer_at(it->second, it->first);
  }
  if (const auto it = doc.find("params.T_max"); it != doc.end()) {
    p.max_steps = integer_at(it->second, it->first);
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  const ConfigDocument doc = parse_config(text);

  for (const auto& [key, value] : doc) {
    if (!kKnownKeys.count(key)) {
      throw ScenarioError(key, "unknown key");
    }
  }
  auto require_key = [&doc](const char* key) -> const ConfigValue& {
    const auto it = doc.find(key);
    if (it == doc.end()) {
      throw ScenarioError(key, "missing required key");
    }
    return it->second;
  };

  Scenario sc;
  sc.bounds = bounds_from(require_key("world.bounds"), "world.bounds");
  sc.goal = vec_from(require_key("goal"), "goal");
  sc.agent_count = integer_at(require_key("swarm.count"), "swarm.count");
  if (sc.agent_count < 1) {
    throw ScenarioError("swarm.count", "must be >= 1");
  }

  apply_params(doc, sc.params);
  sc.params.validate();

  if (const auto it = doc.find("seed"); it != doc.end()) {
    const double d = number_at(it->second, "seed");
    if (d < 0 || d != std::floor(d)) {
      throw ScenarioError("seed", "must be a non-negative integer");
    }
    sc.seed = static_cast<std::uint64_t>(d);
  }

  // Obstacles: explicit list XOR generated forest.
  const auto obstacles_it = doc.find("world.obstacles");
  const auto forest_it = doc.find("world.forest");
  if (obstacles_it != doc.end() && forest_it != doc.end()) {
    throw ScenarioError("world.obstacles", "mutually exclusive with world.forest");
  }
  if (obstacles_it != doc.end()) {
    if (!obstacles_it->second.is_array()) {
      throw ScenarioError("world.obstacles", "expected an array of [cx, cy, r]");
    }
    for (const ConfigValue& item : obstacles_it->second.as_array()) {
      const auto nums = number_array(item, "world.obstacles", 3);
      if (nums[2] <= 0.0) {
        throw ScenarioError("world.obstacles", "obstacle radius must be > 0");
      }
      sc.obstacles.push_back({{nums[0], nums[1]}, nums[2]});
    }
  }
  if (forest_it != doc.end()) {
    if (!forest_it->second.is_table()) {
      throw ScenarioError("world.forest", "expected {density, radius_min, radius_max}");
    }
    const auto& table = forest_it->second.as_table();
    ForestSpec forest;
    for (const auto& [key, value] : table) {
      if (key == "density") {
        forest.density = number_at(value, "world.forest.density");
      } else if (key == "radius_min") {
        forest.radius_min = number_at(value, "world.forest.radius_min");
      } else if (key == "radius_max") {
        forest.radius_max = number_at(value, "world.forest.radius_max");
      } else {
        throw ScenarioError("world.forest." + key, "unknown key");
      }
    }
    if (forest.density < 0.0) {
      throw ScenarioError("world.forest.density", "must be >= 0");
    }
    if (forest.radius_min <= 0.0 || forest.radius_max < forest.radius_min) {
      throw ScenarioError("world.forest", "need 0 < radius_min <= radius_max");
    }
    sc.forest = forest;
  }

  // Informed subgroup.
  const ConfigValue& informed = require_key("swarm.informed");
  if (!informed.is_array() || informed.as_array().empty()) {
    throw ScenarioError("swarm.informed", "at least one informed agent is required");
  }
  std::set<int> informed_ids;
  for (const ConfigValue& item : informed.as_array()) {
    const int id = integer_at(item, "swarm.informed");
    if (id < 0 || id >= sc.agent_count) {
      throw ScenarioError("swarm.informed",
                          "id " + std::to_string(id) + " outside [0, count)");
    }
    if (!informed_ids.insert(id).second) {
      throw ScenarioError("swarm.informed", "duplicate id " + std::to_string(id));
    }
  }
  sc.informed.assign(informed_ids.begin(), informed_ids.end());

  // Spawn: explicit points XOR box.
  const auto points_it = doc.find("swarm.spawn_points");
  const auto box_it = doc.find("swarm.spawn_box");
  if ((points_it != doc.end()) == (box_it != doc.end())) {
    throw ScenarioError("swarm.spawn_points",
                        "exactly one of spawn_points and spawn_box is required");
  }
  if (points_it != doc.end()) {
    if (!points_it->second.is_array()) {
      throw ScenarioError("swarm.spawn_points", "expected an array of [x, y]");
    }
    for (const ConfigValue& item : points_it->second.as_array()) {
      sc.spawn_points.push_back(vec_from(item, "swarm.spawn_points"));
    }
    if (sc.spawn_points.size() != static_cast<std::size_t>(sc.agent_count)) {
      throw ScenarioError("swarm.spawn_points", "need exactly swarm.count points");
    }
    for (std::size_t i = 0; i < sc.spawn_points.size(); ++i) {
      for (std::size_t j = i + 1; j < sc.spawn_points.size(); ++j) {
        if (distance(sc.spawn_points[i], sc.spawn_points[j]) < sc.params.collision_distance) {
          throw ScenarioError("swarm.spawn_points",
                              "points " + std::to_string(i) + " and " + std::to_string(j) +
                                  " closer than d_col");
        }
      }
      for (const Obstacle& tree : sc.obstacles) {
        if (distance(sc.spawn_points[i], tree.center) <= tree.radius) {
          throw ScenarioError("swarm.spawn_points",
                              "point " + std::to_string(i) + " is inside an obstacle");
        }
      }
    }
  } else {
    sc.spawn_box = bounds_from(box_it->second, "swarm.spawn_box");
  }

  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open scenario file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

}  // namespace pacnav
