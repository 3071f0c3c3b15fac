#include "pacnav/selection.hpp"

#include <algorithm>
#include <cmath>

#include "pacnav/errors.hpp"
#include "pacnav/metrics.hpp"

namespace pacnav {

namespace {

constexpr double kMinNetDisplacement = 1e-9;

// Criterion ii: candidate is heading at the previous target point.
bool heading_at_previous_target(const PathHistory& h, const TargetRef& prev,
                                double exclusion_angle) {
  if (!prev.is_neighbor()) {
    // No previous target, or it was the goal itself; nothing to exclude.
    return false;
  }
  const Vec2 motion = h.net_displacement();
  const Vec2 to_prev = prev.point - h.head();
  const double nm = motion.norm(), np = to_prev.norm();
  if (nm < kMinNetDisplacement || np < kMinNetDisplacement) {
    return false;
  }
  const double cos_angle = std::clamp(motion.dot(to_prev) / (nm * np), -1.0, 1.0);
  return std::acos(cos_angle) < exclusion_angle;
}

}  // namespace

CandidateSet build_candidates(const AgentMemory& mem, const Vec2& self_pos,
                              const Params& params) {
  CandidateSet out;
  for (const auto& [id, h] : mem.histories) {  // std::map iterates ascending by id
    if (h.size() < 3) {
      continue;
    }
    if (h.net_displacement().norm() < kMinNetDisplacement) {
      continue;
    }
    if (distance(h.head(), self_pos) <= params.proximity_radius) {
      continue;
    }
    if (heading_at_previous_target(h, mem.prev_target, params.exclusion_angle)) {
      continue;
    }
    out.push_back({id, &h});
  }
  return out;
}

double score_candidate(int j, const CandidateSet& cs) {
  const auto it = std::find_if(cs.begin(), cs.end(),
                               [j](const Candidate& c) { return c.id == j; });
  if (it == cs.end()) {
    throw InvalidInputError("score_candidate: id is not in the candidate set");
  }
  double score = path_persistence(*it->history);
  for (const Candidate& other : cs) {
    if (other.id != j) {
      score += path_similarity(*it->history, *other.history);
    }
  }
  return score;
}

TargetRef select_target(const AgentMemory& mem, const UavState& self,
                        const Vec2& goal, const Params& params) {
  if (self.informed) {
    return TargetRef::goal(goal);
  }
  const CandidateSet cs = build_candidates(mem, self.position, params);
  if (cs.empty()) {
    return TargetRef::none();
  }
  int best_id = cs.front().id;
  const PathHistory* best_history = cs.front().history;
  double best_score = score_candidate(best_id, cs);
  for (std::size_t i = 1; i < cs.size(); ++i) {
    const double s = score_candidate(cs[i].id, cs);
    if (s > best_score) {  // ties keep the lowest id
      best_score = s;
      best_id = cs[i].id;
      best_history = cs[i].history;
    }
  }
  return TargetRef::neighbor(best_id, best_history->head());
}

}  // namespace pacnav
