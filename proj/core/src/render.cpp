#include "pacnav/render.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "pacnav/errors.hpp"

namespace pacnav {

namespace {

// Fixed-precision formatting keeps the output byte-identical across runs.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::string render_trajectories(const std::vector<StepRecord>& records,
                                const Scenario& scenario,
                                const std::vector<Obstacle>& obstacles) {
  if (records.empty()) {
    throw InvalidInputError("render_trajectories: no records");
  }

  const Bounds& b = scenario.bounds;
  const double margin = 2.0;
  std::ostringstream svg;
  // y axis flipped so world +y points up on screen.
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << num(b.xmin - margin) << " " << num(-b.ymax - margin) << " "
      << num(b.width() + 2 * margin) << " " << num(b.height() + 2 * margin) << "\">\n";
  svg << "<rect x=\"" << num(b.xmin) << "\" y=\"" << num(-b.ymax) << "\" width=\""
      << num(b.width()) << "\" height=\"" << num(b.height())
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.1\"/>\n";

  for (const Obstacle& tree : obstacles) {
    svg << "<circle cx=\"" << num(tree.center.x) << "\" cy=\"" << num(-tree.center.y)
        << "\" r=\"" << num(tree.radius) << "\" fill=\"#556b2f\"/>\n";
  }

  svg << "<circle cx=\"" << num(scenario.goal.x) << "\" cy=\"" << num(-scenario.goal.y)
      << "\" r=\"" << num(scenario.params.goal_tolerance)
      << "\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"0.15\" stroke-dasharray=\"0.5,0.5\"/>\n";

  // Per-agent polylines; agent rows are ascending by id in every record.
  std::map<int, std::pair<bool, std::string>> paths;
  for (const StepRecord& rec : records) {
    for (const auto& row : rec.agents) {
      auto& [informed, points] = paths[row.id];
      informed = row.informed;
      if (!points.empty()) {
        points += " ";
      }
      points += num(row.position.x) + "," + num(-row.position.y);
    }
  }
  for (const auto& [id, path] : paths) {
    const char* color = path.first ? "#c03030" : "#3060c0";
    svg << "<polyline points=\"" << path.second << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"0.12\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pacnav
