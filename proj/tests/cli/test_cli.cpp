#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const char* kScenario = R"(
goal = [25, 5]
seed = 1
[world]
bounds = [0, 0, 30, 10]

[swarm]
count = 2
informed = [0, 1]
spawn_points = [[2, 4], [2, 6]]
)";

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("pacnav_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int counter;
};
int TempDir::counter = 0;

int run_cli(const std::string& args) {
  const std::string cmd = std::string(PACNAV_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

fs::path write_scenario(const TempDir& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir.path / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("run writes three outputs and exits 0 on success") {
  TempDir dir;
  const fs::path scenario = write_scenario(dir, "basic.toml", kScenario);
  const fs::path out = dir.path / "out";
  CHECK(run_cli("run --scenario " + scenario.string() + " --out " + out.string()) == 0);
  CHECK(fs::exists(out / "basic.steps.jsonl"));
  CHECK(fs::exists(out / "basic.summary.json"));
  CHECK(fs::exists(out / "basic.svg"));
}

TEST_CASE("malformed scenario exits 1 without outputs") {
  TempDir dir;
  const fs::path scenario = write_scenario(dir, "broken.toml", "goal = [1,\n");
  const fs::path out = dir.path / "out";
  CHECK(run_cli("run --scenario " + scenario.string() + " --out " + out.string()) == 1);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("forced timeout exits 2") {
  TempDir dir;
  const std::string text = std::string(kScenario) + "\n[params]\nT_max = 1\n";
  const fs::path scenario = write_scenario(dir, "slow.toml", text);
  const fs::path out = dir.path / "out";
  CHECK(run_cli("run --scenario " + scenario.string() + " --out " + out.string()) == 2);
}

TEST_CASE("batch writes per-seed outputs plus a report") {
  TempDir dir;
  const fs::path scenario = write_scenario(dir, "batch.toml", kScenario);
  const fs::path out = dir.path / "out";
  CHECK(run_cli("batch --scenario " + scenario.string() + " --seeds 0..4 --out " +
                out.string()) == 0);
  for (int seed = 0; seed <= 4; ++seed) {
    CHECK(fs::exists(out / ("batch_seed" + std::to_string(seed) + ".steps.jsonl")));
    CHECK(fs::exists(out / ("batch_seed" + std::to_string(seed) + ".summary.json")));
  }
  CHECK(fs::exists(out / "batch_report.json"));

  SUBCASE("rerunning with more jobs reproduces every log byte") {
    const fs::path out2 = dir.path / "out2";
    CHECK(run_cli("batch --scenario " + scenario.string() + " --seeds 0..4 --jobs 8 --out " +
                  out2.string()) == 0);
    for (int seed = 0; seed <= 4; ++seed) {
      const std::string name = "batch_seed" + std::to_string(seed) + ".steps.jsonl";
      CHECK(slurp(out / name) == slurp(out2 / name));
    }
    CHECK(slurp(out / "batch_report.json") == slurp(out2 / "batch_report.json"));
  }

  SUBCASE("metrics aggregates the summaries") {
    CHECK(run_cli("metrics --in " + out.string()) == 0);
  }
}

TEST_CASE("metrics on an empty directory exits 1") {
  TempDir dir;
  CHECK(run_cli("metrics --in " + dir.path.string()) == 1);
}
