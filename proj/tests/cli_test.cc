// Copyright 2026 The cogq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the simulate binary end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cogq/report.h"
#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

struct Result {
  int exit_code;
  std::string out;
};

Result Simulate(const std::string& args) {
  const fs::path capture = fs::temp_directory_path() / "cogq_cli_stdout.txt";
  const std::string cmd = std::string(COGQ_SIMULATE_PATH) + " " + args + " > " +
                          capture.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(capture);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cogq_cli" / name;
  fs::remove_all(dir);
  return dir;
}

fs::path WriteConfig(const std::string& name, const std::string& body) {
  const fs::path dir = fs::temp_directory_path() / "cogq_cli";
  fs::create_directories(dir);
  std::ofstream(dir / name) << body;
  return dir / name;
}

const char* kSmall = R"({"num_channels": 8, "num_sus": 8, "num_frames": 12})";

TEST(SimulateCliTest, ConvergenceCsvAndSvg) {
  const fs::path out = Scratch("fig2");
  const fs::path cfg = WriteConfig("small.json", kSmall);
  const Result r = Simulate("--config " + cfg.string() +
                            " --scenario fig2-convergence --seed 3 --runs 4 --svg --out " +
                            out.string());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, (out / "fig2-convergence.csv").string() + "\n" +
                       (out / "fig2-convergence.svg").string() + "\n");
  const std::string csv = Slurp(out / "fig2-convergence.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), cogq::kConvergenceHeader);
  // 4 variants x 12 frames plus the header.
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 49);
}

TEST(SimulateCliTest, SweepScenariosWriteTheirSchemas) {
  const fs::path cfg = WriteConfig(
      "sweep.json", R"({"num_channels": 6, "num_frames": 10, "sweep": [4, 8]})");
  for (const std::string scenario : {"fig3-blocking", "fig4-throughput"}) {
    const fs::path out = Scratch(scenario);
    const Result r = Simulate("--config " + cfg.string() + " --scenario " + scenario +
                              " --runs 3 --out " + out.string());
    ASSERT_EQ(r.exit_code, 0) << scenario;
    const std::string csv = Slurp(out / (scenario + ".csv"));
    const std::string header = csv.substr(0, csv.find('\n'));
    EXPECT_EQ(header, scenario == "fig3-blocking" ? cogq::kBlockingHeader
                                                   : cogq::kThroughputHeader);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);  // 3 variants x 2 K
  }
}

TEST(SimulateCliTest, CustomSweepWritesBothTables) {
  const fs::path cfg = WriteConfig(
      "custom.json",
      R"({"num_channels": 5, "num_frames": 8, "sweep": [3], "schemes": ["independent"]})");
  const fs::path out = Scratch("custom");
  const Result r = Simulate("--config " + cfg.string() + " --runs 2 --out " + out.string());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, (out / "custom-blocking.csv").string() + "\n" +
                       (out / "custom-throughput.csv").string() + "\n");
}

TEST(SimulateCliTest, ByteIdenticalAcrossInvocationsAndThreads) {
  const fs::path cfg = WriteConfig("small.json", kSmall);
  const std::string base = "--config " + cfg.string() +
                           " --scenario fig2-convergence --seed 11 --runs 6 --out ";
  const fs::path a = Scratch("det_a"), b = Scratch("det_b"), c = Scratch("det_c");
  ASSERT_EQ(Simulate(base + a.string() + " --threads 1").exit_code, 0);
  ASSERT_EQ(Simulate(base + b.string() + " --threads 1").exit_code, 0);
  ASSERT_EQ(Simulate(base + c.string() + " --threads 8").exit_code, 0);
  const std::string ref = Slurp(a / "fig2-convergence.csv");
  EXPECT_FALSE(ref.empty());
  EXPECT_EQ(ref, Slurp(b / "fig2-convergence.csv"));
  EXPECT_EQ(ref, Slurp(c / "fig2-convergence.csv"));
}

TEST(SimulateCliTest, ExitCodes) {
  const fs::path out = Scratch("errors");
  EXPECT_EQ(Simulate("--config /nonexistent.json --out " + out.string()).exit_code, 3);
  const fs::path bad_json = WriteConfig("bad.json", "{");
  EXPECT_EQ(Simulate("--config " + bad_json.string() + " --out " + out.string()).exit_code, 2);
  const fs::path bad_alpha = WriteConfig("alpha.json", R"({"learning_rate": 1.5})");
  EXPECT_EQ(Simulate("--config " + bad_alpha.string() + " --out " + out.string()).exit_code, 2);
  EXPECT_EQ(Simulate("--scenario nope --out " + out.string()).exit_code, 2);
  EXPECT_EQ(Simulate("--runs 3").exit_code, 2);  // --out missing

  const fs::path blocker = WriteConfig("blocker", "x");
  const fs::path cfg = WriteConfig("tiny.json", R"({"num_channels": 3, "num_frames": 2})");
  EXPECT_EQ(Simulate("--config " + cfg.string() + " --scenario fig2-convergence --runs 1 --out " +
                     (blocker / "sub").string())
                .exit_code,
            3);
}

}  // namespace
