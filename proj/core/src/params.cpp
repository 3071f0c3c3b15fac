#include "pacnav/params.hpp"

#include <cmath>
#include <string>

#include "pacnav/errors.hpp"

namespace pacnav {

namespace {

void require(bool ok, const std::string& field, const std::string& reason) {
  if (!ok) {
    throw InvalidInputError("params." + field + ": " + reason);
  }
}

}  // namespace

void Params::validate() const {
  require(std::isfinite(v_min_ratio) && v_min_ratio > 0.0 && v_min_ratio < 1.0,
          "V_m", "must be in (0,1)");
  require(std::isfinite(nav_gain) && nav_gain > 0.0, "K_n", "must be > 0");
  require(std::isfinite(avoid_gain) && avoid_gain > 0.0, "K_c", "must be > 0");
  require(std::isfinite(cohesion_radius) && cohesion_radius > 0.0, "R_f", "must be > 0");
  require(std::isfinite(avoid_radius) && avoid_radius > 0.0, "R_o", "must be > 0");
  require(std::isfinite(avoid_radius_agent) && avoid_radius_agent > 0.0,
          "R_o_agent", "must be > 0");
  require(std::isfinite(sensing_range) && sensing_range > 0.0, "R_s", "must be > 0");
  require(sensing_range > avoid_radius, "R_s", "must exceed R_o");
  require(std::isfinite(proximity_radius) && proximity_radius > 0.0, "R_c", "must be > 0");
  require(history_capacity >= 3, "L", "must be >= 3");
  require(std::isfinite(history_gate) && history_gate > 0.0, "delta_min", "must be > 0");
  require(std::isfinite(exclusion_angle) && exclusion_angle > 0.0, "theta_ex", "must be > 0");
  require(std::isfinite(v_max) && v_max > 0.0, "v_max", "must be > 0");
  require(std::isfinite(dt) && dt > 0.0, "dt", "must be > 0");
  require(max_steps > 0, "T_max", "must be > 0");
  require(std::isfinite(goal_tolerance) && goal_tolerance > 0.0, "R_g", "must be > 0");
  require(std::isfinite(collision_distance) && collision_distance > 0.0, "d_col", "must be > 0");
  require(std::isfinite(sensing_noise) && sensing_noise >= 0.0, "sigma_s", "must be >= 0");
}

}  // namespace pacnav
