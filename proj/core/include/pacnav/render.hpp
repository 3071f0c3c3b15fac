#pragma once

#include <string>
#include <vector>

#include "pacnav/record.hpp"
#include "pacnav/scenario.hpp"

namespace pacnav {

/// Static SVG of a finished run: bounds frame, obstacle discs, goal marker,
/// one polyline per agent (informed agents drawn in a distinct color).
/// Output is byte-identical for identical inputs.
std::string render_trajectories(const std::vector<StepRecord>& records,
                                const Scenario& scenario,
                                const std::vector<Obstacle>& obstacles);

}  // namespace pacnav
