#pragma once

#include <map>

#include "pacnav/path_history.hpp"
#include "pacnav/vec2.hpp"

namespace pacnav {

/// The point an agent steers towards: the global goal, the freshest observed
/// position of a followed neighbor, or nothing.
struct TargetRef {
  enum class Kind { None, Goal, Neighbor };

  Kind kind = Kind::None;
  int neighbor_id = -1;  // valid only for Kind::Neighbor
  Vec2 point;            // resolved pursuit point (goal or neighbor history head)

  static TargetRef none() { return {}; }
  static TargetRef goal(const Vec2& g) { return {Kind::Goal, -1, g}; }
  static TargetRef neighbor(int id, const Vec2& p) { return {Kind::Neighbor, id, p}; }

  bool is_none() const { return kind == Kind::None; }
  bool is_goal() const { return kind == Kind::Goal; }
  bool is_neighbor() const { return kind == Kind::Neighbor; }
};

struct UavState {
  int id = 0;
  Vec2 position;
  Vec2 prev_command;     // u[k-1]
  bool informed = false;  // knows the goal position
};

/// One agent's private world model, built purely from its own observations.
struct AgentMemory {
  std::map<int, PathHistory> histories;  // neighbor id -> observed path
  TargetRef prev_target;                 // d[k-1]
  Vec2 prev_command;
};

}  // namespace pacnav
