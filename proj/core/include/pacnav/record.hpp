#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pacnav/types.hpp"
#include "pacnav/vec2.hpp"

namespace pacnav {

struct RunStatus {
  enum class Kind { Running, Success, Collision, Timeout };

  Kind kind = Kind::Running;
  std::string detail;  // collision description, empty otherwise

  bool terminal() const { return kind != Kind::Running; }

  static RunStatus running() { return {}; }
  static RunStatus success() { return {Kind::Success, {}}; }
  static RunStatus collision(std::string d) { return {Kind::Collision, std::move(d)}; }
  static RunStatus timeout() { return {Kind::Timeout, {}}; }
};

std::string to_string(RunStatus::Kind k);
RunStatus::Kind status_kind_from_string(const std::string& s);

/// One per-timestep log row: post-integration positions, the commands that
/// produced them, and the targets chosen that step.
struct StepRecord {
  struct AgentRow {
    int id = 0;
    Vec2 position;
    Vec2 command;
    bool informed = false;
    TargetRef target;
  };

  int step = 0;
  std::vector<AgentRow> agents;  // ascending by id
  RunStatus status;
};

/// Aggregate metrics of one finished run.
struct RunSummary {
  RunStatus status;
  int steps = 0;
  std::vector<double> path_length;                    // per agent, meters
  double min_interagent_distance = 0.0;               // over the whole run
  std::optional<double> min_obstacle_clearance;       // absent when no obstacles
  std::vector<std::optional<double>> time_to_goal;    // per agent, seconds
  double final_cohesion_radius = 0.0;                 // max distance to centroid
};

/// Appends exactly one JSON line (no trailing spaces, '\n' terminated).
void write_step_record(const StepRecord& rec, std::ostream& sink);
std::string step_record_to_line(const StepRecord& rec);
StepRecord parse_step_record(const std::string& line);

std::string run_summary_to_json(const RunSummary& s);
RunSummary parse_run_summary(const std::string& text);

}  // namespace pacnav
