#include "pacnav/record.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pacnav/errors.hpp"

namespace pacnav {

using nlohmann::json;

std::string to_string(RunStatus::Kind k) {
  switch (k) {
    case RunStatus::Kind::Running:
      return "running";
    case RunStatus::Kind::Success:
      return "success";
    case RunStatus::Kind::Collision:
      return "collision";
    case RunStatus::Kind::Timeout:
      return "timeout";
  }
  throw InvalidInputError("unknown run status");
}

RunStatus::Kind status_kind_from_string(const std::string& s) {
  if (s == "running") return RunStatus::Kind::Running;
  if (s == "success") return RunStatus::Kind::Success;
  if (s == "collision") return RunStatus::Kind::Collision;
  if (s == "timeout") return RunStatus::Kind::Timeout;
  throw InvalidInputError("unknown run status: " + s);
}

namespace {

json vec_to_json(const Vec2& v) { return json::array({v.x, v.y}); }

Vec2 vec_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json target_to_json(const TargetRef& t) {
  switch (t.kind) {
    case TargetRef::Kind::None:
      return nullptr;
    case TargetRef::Kind::Goal:
      return "goal";
    case TargetRef::Kind::Neighbor:
      return t.neighbor_id;
  }
  throw InvalidInputError("unknown target kind");
}

TargetRef target_from_json(const json& j, const Vec2& point) {
  if (j.is_null()) return TargetRef::none();
  if (j.is_string() && j.get<std::string>() == "goal") return TargetRef::goal(point);
  return TargetRef::neighbor(j.get<int>(), point);
}

}  // namespace

std::string step_record_to_line(const StepRecord& rec) {
  json agents = json::array();
  for (const auto& a : rec.agents) {
    agents.push_back({{"id", a.id},
                      {"pos", vec_to_json(a.position)},
                      {"cmd", vec_to_json(a.command)},
                      {"informed", a.informed},
                      {"target", target_to_json(a.target)},
                      {"target_point", a.target.is_none() ? json(nullptr)
                                                          : vec_to_json(a.target.point)}});
  }
  const json j = {{"k", rec.step},
                  {"status", to_string(rec.status.kind)},
                  {"agents", agents}};
  return j.dump();
}

void write_step_record(const StepRecord& rec, std::ostream& sink) {
  sink << step_record_to_line(rec) << '\n';
  if (!sink) {
    throw Error("step record write failed");
  }
}

StepRecord parse_step_record(const std::string& line) {
  const json j = json::parse(line);
  StepRecord rec;
  rec.step = j.at("k").get<int>();
  rec.status.kind = status_kind_from_string(j.at("status").get<std::string>());
  for (const auto& a : j.at("agents")) {
    StepRecord::AgentRow row;
    row.id = a.at("id").get<int>();
    row.position = vec_from_json(a.at("pos"));
    row.command = vec_from_json(a.at("cmd"));
    row.informed = a.at("informed").get<bool>();
    const Vec2 tp = a.at("target_point").is_null() ? Vec2{} : vec_from_json(a.at("target_point"));
    row.target = target_from_json(a.at("target"), tp);
    rec.agents.push_back(row);
  }
  return rec;
}

std::string run_summary_to_json(const RunSummary& s) {
  json ttg = json::array();
  for (const auto& t : s.time_to_goal) {
    ttg.push_back(t ? json(*t) : json(nullptr));
  }
  json j = {{"status", to_string(s.status.kind)},
            {"steps", s.steps},
            {"path_length", s.path_length},
            {"min_interagent_distance", s.min_interagent_distance},
            {"min_obstacle_clearance",
             s.min_obstacle_clearance ? json(*s.min_obstacle_clearance) : json(nullptr)},
            {"time_to_goal", ttg},
            {"final_cohesion_radius", s.final_cohesion_radius}};
  if (!s.status.detail.empty()) {
    j["detail"] = s.status.detail;
  }
  return j.dump(2) + "\n";
}

RunSummary parse_run_summary(const std::string& text) {
  const json j = json::parse(text);
  RunSummary s;
  s.status.kind = status_kind_from_string(j.at("status").get<std::string>());
  if (j.contains("detail")) {
    s.status.detail = j.at("detail").get<std::string>();
  }
  s.steps = j.at("steps").get<int>();
  s.path_length = j.at("path_length").get<std::vector<double>>();
  s.min_interagent_distance = j.at("min_interagent_distance").get<double>();
  if (!j.at("min_obstacle_clearance").is_null()) {
    s.min_obstacle_clearance = j.at("min_obstacle_clearance").get<double>();
  }
  for (const auto& t : j.at("time_to_goal")) {
    s.time_to_goal.push_back(t.is_null() ? std::optional<double>{}
                                         : std::optional<double>{t.get<double>()});
  }
  s.final_cohesion_radius = j.at("final_cohesion_radius").get<double>();
  return s;
}

}  // namespace pacnav
