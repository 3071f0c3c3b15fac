#include "pacnav/path_history.hpp"

namespace pacnav {

bool PathHistory::update(const Vec2& obs, double gate) {
  if (!obs.finite()) {
    throw InvalidInputError("path history observation must be finite");
  }
  if (!points_.empty() && distance(obs, points_.front()) < gate) {
    return false;
  }
  points_.push_front(obs);
  while (points_.size() > capacity_) {
    points_.pop_back();
  }
  return true;
}

Vec2 PathHistory::net_displacement() const {
  if (points_.size() < 2) {
    throw InsufficientHistoryError("net displacement needs at least 2 points");
  }
  return points_.front() - points_.back();
}

}  // namespace pacnav
