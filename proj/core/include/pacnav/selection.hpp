#pragma once

#include <vector>

#include "pacnav/params.hpp"
#include "pacnav/types.hpp"

namespace pacnav {

struct Candidate {
  int id;
  const PathHistory* history;  // borrowed from the AgentMemory passed in
};

/// Follow-target candidates, ascending by id. Every member has >= 3 history
/// points, nonzero net displacement, is outside the proximity radius, and is
/// not heading at the previous target.
using CandidateSet = std::vector<Candidate>;

CandidateSet build_candidates(const AgentMemory& mem, const Vec2& self_pos,
                              const Params& params);

/// Combined persistence + similarity score of candidate j against the rest
/// of the set. Throws InvalidInputError if j is not a member.
double score_candidate(int j, const CandidateSet& cs);

/// Informed agents always target the goal. Uninformed agents pick the
/// highest-scoring candidate (ties to the lowest id) or None if the
/// candidate set is empty.
TargetRef select_target(const AgentMemory& mem, const UavState& self,
                        const Vec2& goal, const Params& params);

}  // namespace pacnav
