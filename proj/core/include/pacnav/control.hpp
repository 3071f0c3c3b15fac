#pragma once

#include <vector>

#include "pacnav/params.hpp"
#include "pacnav/types.hpp"

namespace pacnav {

/// Nearest sensed point of one obstacle, or one neighbor's estimated position.
/// Neighbor points may use a separately configured avoidance radius.
struct ObstaclePoint {
  Vec2 point;
  bool is_agent = false;
};

/// Navigation vector for a goal-informed agent. The pull towards the
/// attraction point is attenuated down to v_min_ratio as the mean distance
/// to the listed neighbors approaches twice the cohesion radius, so the
/// informed agent does not outrun the swarm.
Vec2 nav_informed(const Vec2& self_pos, const std::vector<Vec2>& neighbor_points,
                  const Vec2& attraction, const Params& params);

/// Navigation vector for an uninformed agent: plain proportional pull towards
/// the followed neighbor's point, zero when there is no target.
Vec2 nav_uninformed(const Vec2& self_pos, const TargetRef& target, const Params& params);

Vec2 navigation_vector(const UavState& self, const TargetRef& target,
                       const std::vector<Vec2>& neighbor_points, const Vec2& goal,
                       const Params& params);

/// Tangential repulsion from one obstacle point. Magnitude max(0, 1/d - 1/R_o);
/// direction is the perpendicular closest in angle to the previous command,
/// or radially away when the previous command is (near) zero.
Vec2 avoid_one(const Vec2& self_pos, const ObstaclePoint& o, const Vec2& u_prev,
               double avoid_radius);

Vec2 avoidance_vector(const Vec2& self_pos, const std::vector<ObstaclePoint>& obstacles,
                      const Vec2& u_prev, const Params& params);

/// u = n + c, rescaled to v_max when over the cap.
Vec2 compose_command(const Vec2& nav, const Vec2& avoid, double v_max);

}  // namespace pacnav
