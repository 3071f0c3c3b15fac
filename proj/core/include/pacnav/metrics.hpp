#pragma once

#include "pacnav/path_history.hpp"

namespace pacnav {

/// Path persistence: mean over consecutive displacement pairs of
/// max(0, cos(turn angle)), in [0,1]. 1 for perfectly straight motion,
/// 0 when every turn is 90 degrees or more. Requires >= 3 points.
double path_persistence(const PathHistory& h);

/// Path similarity of two observed paths: (1 + cos phi)/2 where phi is the
/// angle between the net displacements. Symmetric, in [0,1]. Requires >= 2
/// points per history and nonzero net displacements.
double path_similarity(const PathHistory& a, const PathHistory& b);

}  // namespace pacnav
