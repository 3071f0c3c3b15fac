#include "pacnav/metrics.hpp"

#include <algorithm>

#include "pacnav/errors.hpp"

namespace pacnav {

double path_persistence(const PathHistory& h) {
  if (h.size() < 3) {
    throw InsufficientHistoryError("path persistence needs at least 3 points");
  }
  // Displacements newest-first; the gate guarantees they are nonzero.
  double sum = 0.0;
  const std::size_t pairs = h.size() - 2;
  for (std::size_t m = 0; m + 2 < h.size(); ++m) {
    const Vec2 newer = h.at(m) - h.at(m + 1);
    const Vec2 older = h.at(m + 1) - h.at(m + 2);
    const double cos_turn = older.dot(newer) / (older.norm() * newer.norm());
    sum += std::max(0.0, cos_turn);
  }
  return std::clamp(sum / static_cast<double>(pairs), 0.0, 1.0);
}

double path_similarity(const PathHistory& a, const PathHistory& b) {
  const Vec2 u = a.net_displacement();
  const Vec2 w = b.net_displacement();
  const double nu = u.norm(), nw = w.norm();
  if (nu < 1e-9 || nw < 1e-9) {
    throw DegenerateGeometryError("path similarity undefined for zero net displacement");
  }
  const double cos_phi = std::clamp(u.dot(w) / (nu * nw), -1.0, 1.0);
  return 0.5 * (1.0 + cos_phi);
}

}  // namespace pacnav
