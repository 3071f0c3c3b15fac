#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "pacnav/path_history.hpp"
#include "pacnav/vec2.hpp"

namespace pacnav::testing {

inline PathHistory history_of(const std::vector<Vec2>& newest_first, int capacity = 20) {
  PathHistory h(capacity);
  for (auto it = newest_first.rbegin(); it != newest_first.rend(); ++it) {
    h.update(*it, 0.0);  // gate disabled; caller controls spacing
  }
  return h;
}

/// Random gated history with the given number of points, step length >= 0.5.
inline PathHistory random_history(std::mt19937_64& rng, int points, int capacity = 20) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> step_len(0.5, 2.0);
  std::uniform_real_distribution<double> coord(-50.0, 50.0);
  PathHistory h(capacity);
  Vec2 p{coord(rng), coord(rng)};
  for (int i = 0; i < points; ++i) {
    h.update(p, 0.45);
    const double a = angle(rng);
    p += step_len(rng) * Vec2{std::cos(a), std::sin(a)};
  }
  return h;
}

}  // namespace pacnav::testing
