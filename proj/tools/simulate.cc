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

// Batch driver for the subcarrier-assignment experiments.
//
//   simulate --scenario fig2-convergence --runs 200 --out results --svg
//
// Scenarios: fig2-convergence (accessing SUs per iteration), fig3-blocking
// (SU/PU blocking versus K), fig4-throughput (normalized throughput versus
// K) and custom (everything from --config). Exit codes: 0 success, 2 config
// error, 3 I/O error, 4 internal invariant violation.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cogq/config.h"
#include "cogq/metrics.h"
#include "cogq/report.h"
#include "cogq/scenario.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::optional<std::string> config_path;
  std::optional<std::string> scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> runs;
  std::string out_dir;
  bool svg = false;
  bool paper_scale = false;
  unsigned threads = 1;
};

void Announce(const fs::path& path) { std::cout << path.string() << '\n'; }

int Run(const Options& opts) {
  cogq::ExperimentSetup setup =
      opts.config_path
          ? cogq::LoadConfig(*opts.config_path, opts.scenario, opts.paper_scale)
          : cogq::ParseConfig(nlohmann::json::object(), opts.scenario,
                              opts.paper_scale);
  cogq::SimConfig& config = setup.config;
  if (opts.seed) config.rng_seed = *opts.seed;
  if (opts.runs) config.num_runs = *opts.runs;
  cogq::Validate(config);

  const fs::path out_dir(opts.out_dir);
  const std::string& name = setup.preset.name;
  const auto& schemes = setup.preset.schemes;

  if (!setup.preset.sweep) {
    const auto records = cogq::ConvergenceExperiment(config, schemes,
                                                     config.num_runs, opts.threads);
    const std::string stem =
        name == cogq::kScenarioCustom ? "custom-convergence" : name;
    const fs::path csv = out_dir / (stem + ".csv");
    cogq::EmitConvergenceCsv(records, csv);
    Announce(csv);
    if (opts.svg) {
      const fs::path svg = out_dir / (stem + ".svg");
      cogq::EmitSvgPlot(cogq::ConvergencePlot(records), svg);
      Announce(svg);
    }
    return kExitOk;
  }

  const auto records = cogq::SweepNumSus(config, schemes, *setup.preset.sweep,
                                         config.num_runs, opts.threads);
  const bool custom = name == cogq::kScenarioCustom;
  if (custom || name == cogq::kScenarioBlocking) {
    const std::string stem = custom ? "custom-blocking" : name;
    const fs::path csv = out_dir / (stem + ".csv");
    cogq::EmitBlockingCsv(records, csv);
    Announce(csv);
    if (opts.svg) {
      const fs::path svg = out_dir / (stem + ".svg");
      cogq::EmitSvgPlot(cogq::BlockingPlot(records), svg);
      Announce(svg);
    }
  }
  if (custom || name == cogq::kScenarioThroughput) {
    const std::string stem = custom ? "custom-throughput" : name;
    const fs::path csv = out_dir / (stem + ".csv");
    cogq::EmitThroughputCsv(records, csv);
    Announce(csv);
    if (opts.svg) {
      const fs::path svg = out_dir / (stem + ".svg");
      cogq::EmitSvgPlot(cogq::ThroughputPlot(records), svg);
      Announce(svg);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-learning subcarrier assignment simulator"};
  Options opts;
  app.add_option("--config", opts.config_path, "JSON config file");
  app.add_option("--scenario", opts.scenario,
                 "fig2-convergence | fig3-blocking | fig4-throughput | custom");
  app.add_option("--seed", opts.seed, "master RNG seed");
  app.add_option("--runs", opts.runs, "Monte Carlo runs per point")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", opts.out_dir, "output directory")->required();
  app.add_flag("--svg", opts.svg, "also write SVG line plots");
  app.add_flag("--paper-scale", opts.paper_scale,
               "use 300 subchannels and K in [100, 550]");
  app.add_option("--threads", opts.threads, "worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    return Run(opts);
  } catch (const cogq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return e.kind() == cogq::ConfigError::Kind::kMissingFile ? kExitIo
                                                              : kExitConfig;
  } catch (const cogq::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
