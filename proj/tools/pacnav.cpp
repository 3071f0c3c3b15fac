#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pacnav/render.hpp"
#include "pacnav/runner.hpp"
#include "pacnav/scenario.hpp"

namespace fs = std::filesystem;
using namespace pacnav;

namespace {

int status_exit_code(RunStatus::Kind kind) {
  switch (kind) {
    case RunStatus::Kind::Success:
      return 0;
    case RunStatus::Kind::Timeout:
      return 2;
    case RunStatus::Kind::Collision:
      return 3;
    case RunStatus::Kind::Running:
      break;
  }
  return 1;
}

void write_run_outputs(const RunResult& result, const Scenario& scenario,
                       const fs::path& out_dir, const std::string& run_name) {
  fs::create_directories(out_dir);
  {
    std::ofstream steps(out_dir / (run_name + ".steps.jsonl"));
    for (const StepRecord& rec : result.records) {
      write_step_record(rec, steps);
    }
  }
  {
    std::ofstream summary(out_dir / (run_name + ".summary.json"));
    summary << run_summary_to_json(result.summary);
  }
  if (!result.records.empty()) {
    std::ofstream svg(out_dir / (run_name + ".svg"));
    svg << render_trajectories(result.records, scenario, result.obstacles);
  }
}

int cmd_run(const std::string& scenario_path, std::optional<std::uint64_t> seed,
            const std::string& out_dir) {
  Scenario scenario;
  try {
    scenario = load_scenario_file(scenario_path);
  } catch (const Error& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 1;
  }
  const RunResult result = run_scenario(scenario, seed);
  const std::string run_name = fs::path(scenario_path).stem().string();
  write_run_outputs(result, scenario, out_dir, run_name);
  std::cout << to_string(result.status.kind) << " after " << result.summary.steps
            << " steps (seed " << result.seed << ")\n";
  return status_exit_code(result.status.kind);
}

bool parse_seed_range(const std::string& text, std::uint64_t& begin, std::uint64_t& end) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    return false;
  }
  try {
    begin = std::stoull(text.substr(0, sep));
    end = std::stoull(text.substr(sep + 2));
  } catch (const std::exception&) {
    return false;
  }
  return end >= begin;
}

int cmd_batch(const std::string& scenario_path, const std::string& seed_range, int jobs,
              const std::string& out_dir) {
  std::uint64_t seed_begin = 0, seed_end = 0;
  if (!parse_seed_range(seed_range, seed_begin, seed_end)) {
    std::cerr << "bad seed range '" << seed_range << "', expected <a>..<b>\n";
    return 1;
  }
  Scenario scenario;
  try {
    scenario = load_scenario_file(scenario_path);
  } catch (const Error& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 1;
  }

  const std::string stem = fs::path(scenario_path).stem().string();
  fs::create_directories(out_dir);
  std::mutex io_mutex;
  const BatchReport report = run_batch(
      scenario, seed_begin, seed_end, jobs, [&](const RunResult& result) {
        // Each run writes only its own files; the lock is just for stdout.
        write_run_outputs(result, scenario, out_dir,
                          stem + "_seed" + std::to_string(result.seed));
        std::lock_guard<std::mutex> lock(io_mutex);
        std::cout << "seed " << result.seed << ": " << to_string(result.status.kind)
                  << " after " << result.summary.steps << " steps\n";
      });

  std::ofstream out(fs::path(out_dir) / "batch_report.json");
  out << batch_report_to_json(report);
  std::cout << "success rate " << report.success_rate << " over " << report.runs.size()
            << " seeds\n";
  return 0;
}

int cmd_metrics(const std::string& in_dir) {
  std::vector<BatchReport::Entry> entries;
  std::vector<std::string> names;
  std::vector<fs::path> files;
  if (!fs::is_directory(in_dir)) {
    std::cerr << "not a directory: " << in_dir << "\n";
    return 1;
  }
  for (const auto& entry : fs::directory_iterator(in_dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > 13 && name.substr(name.size() - 13) == ".summary.json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
      entries.push_back({entries.size(), parse_run_summary(text)});
      names.push_back(path.filename().string());
    } catch (const std::exception& e) {
      std::cerr << "skipping " << path << ": " << e.what() << "\n";
    }
  }
  if (entries.empty()) {
    std::cerr << "no summaries found in " << in_dir << "\n";
    return 1;
  }

  // dt is not recorded in summaries; report times in steps * default dt.
  const BatchReport report = aggregate_summaries(entries, Params{}.dt);
  auto fmt_opt = [](const std::optional<double>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::cout << "run\tstatus\tsteps\tmin_dist\tmin_clearance\n";
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    const RunSummary& s = report.runs[i].summary;
    std::cout << names[i] << "\t" << to_string(s.status.kind) << "\t" << s.steps << "\t"
              << s.min_interagent_distance << "\t" << fmt_opt(s.min_obstacle_clearance)
              << "\n";
  }
  std::cout << "\nsuccess_rate\t" << report.success_rate << "\n"
            << "time_to_goal_mean\t" << fmt_opt(report.time_to_goal_mean) << "\n"
            << "time_to_goal_std\t" << fmt_opt(report.time_to_goal_std) << "\n"
            << "min_interagent_distance\t" << fmt_opt(report.min_interagent_distance) << "\n"
            << "min_obstacle_clearance\t" << fmt_opt(report.min_obstacle_clearance) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PACNav swarm navigation simulator"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir, in_dir, seed_range;
  std::optional<std::uint64_t> seed;
  int jobs = 1;

  auto* run = app.add_subcommand("run", "Simulate one scenario to completion");
  run->add_option("--scenario", scenario_path, "Scenario file")->required();
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--out", out_dir, "Output directory")->required();

  auto* batch = app.add_subcommand("batch", "Run a scenario over a range of seeds");
  batch->add_option("--scenario", scenario_path, "Scenario file")->required();
  batch->add_option("--seeds", seed_range, "Inclusive seed range <a>..<b>")->required();
  batch->add_option("--jobs", jobs, "Worker threads");
  batch->add_option("--out", out_dir, "Output directory")->required();

  auto* metrics = app.add_subcommand("metrics", "Aggregate run summaries in a directory");
  metrics->add_option("--in", in_dir, "Directory containing *.summary.json")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(scenario_path, seed, out_dir);
    }
    if (batch->parsed()) {
      return cmd_batch(scenario_path, seed_range, jobs, out_dir);
    }
    if (metrics->parsed()) {
      return cmd_metrics(in_dir);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
