#pragma once

#include <cstdint>

namespace pacnav {

/// All control and selection constants. Defaults are the desk-scale set;
/// scenario files may override any field.
struct Params {
  double v_min_ratio = 0.2;       ///< V_m, minimum normalized velocity of the informed, in (0,1)
  double nav_gain = 0.5;          ///< K_n [1/s], position-to-velocity scaling
  double avoid_gain = 2.0;        ///< K_c [m^2/s], collision avoidance superposition scaling
  double cohesion_radius = 10.0;  ///< R_f [m], distance scale attenuating informed speed
  double avoid_radius = 4.0;      ///< R_o [m], obstacle avoidance cutoff
  double avoid_radius_agent = 4.0;  ///< R_o applied to neighbor agents (defaults to R_o)
  double sensing_range = 15.0;    ///< R_s [m]
  double proximity_radius = 3.0;  ///< R_c [m], criterion-i exclusion radius
  int history_capacity = 20;      ///< L, >= 3
  double history_gate = 0.5;      ///< delta_min [m], displacement gate between stored points
  double exclusion_angle = 0.5235987755982988;  ///< theta_ex [rad], criterion-ii cone half-angle (30 deg)
  double v_max = 1.5;             ///< [m/s] command saturation
  double dt = 0.1;                ///< [s] integration step
  int max_steps = 3000;           ///< T_max
  double goal_tolerance = 3.0;    ///< R_g [m]
  double collision_distance = 0.5;  ///< d_col [m], inter-agent collision threshold
  double sensing_noise = 0.0;     ///< sigma_s [m], isotropic Gaussian std (0 = noiseless)

  /// Throws InvalidInputError naming the offending field.
  void validate() const;
};

}  // namespace pacnav
