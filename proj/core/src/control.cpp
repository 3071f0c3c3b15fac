#include "pacnav/control.hpp"

#include <algorithm>
#include <cmath>

#include "pacnav/errors.hpp"

namespace pacnav {

namespace {
constexpr double kZeroCommand = 1e-9;
}

Vec2 nav_informed(const Vec2& self_pos, const std::vector<Vec2>& neighbor_points,
                  const Vec2& attraction, const Params& params) {
  double attenuation = 1.0;
  if (!neighbor_points.empty()) {
    double sum = 0.0;
    for (const Vec2& p : neighbor_points) {
      sum += distance(p, self_pos);
    }
    const double mean = sum / static_cast<double>(neighbor_points.size());
    attenuation = std::max(params.v_min_ratio, 1.0 - mean / (2.0 * params.cohesion_radius));
  }
  return attenuation * params.nav_gain * (attraction - self_pos);
}

Vec2 nav_uninformed(const Vec2& self_pos, const TargetRef& target, const Params& params) {
  switch (target.kind) {
    case TargetRef::Kind::None:
      return {};
    case TargetRef::Kind::Neighbor:
      return params.nav_gain * (target.point - self_pos);
    case TargetRef::Kind::Goal:
      break;
  }
  throw ContractViolationError("goal target passed to the uninformed navigation law");
}

Vec2 navigation_vector(const UavState& self, const TargetRef& target,
                       const std::vector<Vec2>& neighbor_points, const Vec2& goal,
                       const Params& params) {
  if (self.informed) {
    return nav_informed(self.position, neighbor_points, goal, params);
  }
  return nav_uninformed(self.position, target, params);
}

Vec2 avoid_one(const Vec2& self_pos, const ObstaclePoint& o, const Vec2& u_prev,
               double avoid_radius) {
  const Vec2 to_obstacle = o.point - self_pos;
  const double dist = to_obstacle.norm();
  if (dist < kZeroCommand) {
    throw DegenerateGeometryError("avoid_one: agent coincides with obstacle point");
  }
  const double magnitude = std::max(0.0, 1.0 / dist - 1.0 / avoid_radius);
  if (magnitude == 0.0) {
    return {};
  }
  if (u_prev.norm() < kZeroCommand) {
    // No previous motion to stay aligned with; back straight away.
    return magnitude * (-to_obstacle / dist);
  }
  const Vec2 side_a = to_obstacle.perp() / dist;
  const Vec2 side_b = -side_a;
  const Vec2 dir = side_a.dot(u_prev) >= side_b.dot(u_prev) ? side_a : side_b;
  return magnitude * dir;
}

Vec2 avoidance_vector(const Vec2& self_pos, const std::vector<ObstaclePoint>& obstacles,
                      const Vec2& u_prev, const Params& params) {
  Vec2 sum;
  for (const ObstaclePoint& o : obstacles) {
    const double radius = o.is_agent ? params.avoid_radius_agent : params.avoid_radius;
    sum += avoid_one(self_pos, o, u_prev, radius);
  }
  return params.avoid_gain * sum;
}

Vec2 compose_command(const Vec2& nav, const Vec2& avoid, double v_max) {
  if (!nav.finite() || !avoid.finite()) {
    throw InvalidInputError("compose_command: non-finite input");
  }
  Vec2 u = nav + avoid;
  const double speed = u.norm();
  if (speed > v_max) {
    u = u * (v_max / speed);
  }
  return u;
}

}  // namespace pacnav
