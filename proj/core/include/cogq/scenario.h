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

#ifndef COGQ_SCENARIO_H_
#define COGQ_SCENARIO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cogq/config.h"
#include "cogq/metrics.h"

namespace cogq {

inline constexpr std::string_view kScenarioConvergence = "fig2-convergence";
inline constexpr std::string_view kScenarioBlocking = "fig3-blocking";
inline constexpr std::string_view kScenarioThroughput = "fig4-throughput";
inline constexpr std::string_view kScenarioCustom = "custom";

struct ScenarioPreset {
  std::string name;
  // SimConfig keys applied on top of the defaults before the user's file.
  nlohmann::json overrides = nlohmann::json::object();
  std::vector<SchemeVariant> schemes;
  // K values to sweep; unset runs a convergence experiment at the
  // configured K.
  std::optional<std::vector<std::uint32_t>> sweep;
};

// Built-in presets. The default (desk) scale uses 50 subchannels; the
// paper scale uses 300 subchannels and K in [100, 550]. Throws ConfigError
// naming "scenario" for an unknown name.
ScenarioPreset BuiltinPreset(std::string_view name, bool paper_scale = false);

struct ExperimentSetup {
  SimConfig config;
  ScenarioPreset preset;
};

// Applies the SimConfig keys found in `doc` to `config`. Keys it does not
// recognize are left for the caller.
void ApplyConfigKeys(const nlohmann::json& doc, SimConfig& config);

// Builds a validated setup from a config document. Precedence, lowest
// first: defaults, preset overrides, document keys. `scenario` replaces the
// document's "scenario" entry when given.
ExperimentSetup ParseConfig(const nlohmann::json& doc,
                            std::optional<std::string> scenario = {},
                            bool paper_scale = false);

// Reads and parses a JSON config file. Missing file, malformed JSON and
// invalid values raise ConfigError with distinct kinds.
ExperimentSetup LoadConfig(const std::filesystem::path& path,
                           std::optional<std::string> scenario = {},
                           bool paper_scale = false);

nlohmann::json ToJson(const SimConfig& config);

}  // namespace cogq

#endif  // COGQ_SCENARIO_H_
