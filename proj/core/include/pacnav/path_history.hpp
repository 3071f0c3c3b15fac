#pragma once

#include <cstddef>
#include <deque>

#include "pacnav/errors.hpp"
#include "pacnav/vec2.hpp"

namespace pacnav {

/// Bounded, displacement-gated sequence of observed positions of one tracked
/// agent, newest first. Consecutive stored points are always at least the
/// gate distance apart, so stored displacement vectors are never zero.
class PathHistory {
 public:
  explicit PathHistory(int capacity = 20) : capacity_(static_cast<std::size_t>(capacity)) {}

  /// Inserts obs at the front if the history is empty or obs is at least
  /// gate meters from the current head; evicts the oldest point when full.
  /// Returns true if the observation was stored.
  bool update(const Vec2& obs, double gate);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::size_t capacity() const { return capacity_; }

  /// Zero-based, newest first: at(0) is the most recent observation.
  const Vec2& at(std::size_t idx) const { return points_.at(idx); }
  const Vec2& head() const { return points_.front(); }
  const Vec2& tail() const { return points_.back(); }

  /// Newest minus oldest. Requires at least 2 points.
  Vec2 net_displacement() const;

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::deque<Vec2> points_;  // front = newest
  std::size_t capacity_;
};

}  // namespace pacnav
