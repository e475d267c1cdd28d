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

#include "cogq/scenario.h"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace cogq {

using nlohmann::json;

namespace {

[[noreturn]] void Invalid(const std::string& key, const std::string& what) {
  throw ConfigError(ConfigError::Kind::kInvalid, key, what);
}

std::vector<std::uint32_t> Range(std::uint32_t first, std::uint32_t last,
                                 std::uint32_t step) {
  std::vector<std::uint32_t> v;
  for (std::uint32_t k = first; k <= last; k += step) v.push_back(k);
  return v;
}

double GetReal(const json& value, const std::string& key) {
  if (!value.is_number()) Invalid(key, "must be a number");
  return value.get<double>();
}

std::uint64_t GetUnsigned(const json& value, const std::string& key) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    Invalid(key, "must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(value.get<std::int64_t>());
}

std::uint32_t GetUnsigned32(const json& value, const std::string& key) {
  const std::uint64_t v = GetUnsigned(value, key);
  if (v > UINT32_MAX) Invalid(key, "is too large");
  return static_cast<std::uint32_t>(v);
}

const std::set<std::string>& ScenarioKeys() {
  static const std::set<std::string> keys = {"scenario", "schemes", "sweep"};
  return keys;
}

SchemeVariant ParseVariant(const json& item) {
  const std::string key = "schemes";
  std::string name;
  std::uint32_t delta = 0;
  if (item.is_string()) {
    name = item.get<std::string>();
  } else if (item.is_object()) {
    if (!item.contains("scheme") || !item["scheme"].is_string()) {
      Invalid(key, "each entry needs a \"scheme\" string");
    }
    name = item["scheme"].get<std::string>();
    if (item.contains("delta")) delta = GetUnsigned32(item["delta"], "schemes.delta");
  } else {
    Invalid(key, "entries must be strings or objects");
  }
  if (name == "independent") return {Scheme::kIndependent, 0};
  if (name == "collaborative") return {Scheme::kCollaborative, delta};
  Invalid(key, fmt::format("unknown scheme \"{}\"", name));
}

}  // namespace

ScenarioPreset BuiltinPreset(std::string_view name, bool paper_scale) {
  const std::uint32_t channels = paper_scale ? 300 : 50;
  const std::vector<std::uint32_t> sweep =
      paper_scale ? Range(100, 550, 50) : Range(30, 90, 10);

  ScenarioPreset p;
  p.name = std::string(name);
  if (name == kScenarioConvergence) {
    p.overrides = {{"num_channels", channels}, {"num_sus", channels}};
    p.schemes = {{Scheme::kIndependent, 0},
                 {Scheme::kCollaborative, 0},
                 {Scheme::kCollaborative, 2},
                 {Scheme::kCollaborative, 4}};
  } else if (name == kScenarioBlocking || name == kScenarioThroughput) {
    p.overrides = {{"num_channels", channels}};
    p.schemes = {{Scheme::kIndependent, 0},
                 {Scheme::kCollaborative, 2},
                 {Scheme::kCollaborative, 5}};
    p.sweep = sweep;
  } else if (name != kScenarioCustom) {
    Invalid("scenario", fmt::format("unknown scenario \"{}\"", name));
  }
  return p;
}

void ApplyConfigKeys(const json& doc, SimConfig& c) {
  for (const auto& [key, value] : doc.items()) {
    if (key == "num_channels") {
      c.num_channels = GetUnsigned32(value, key);
    } else if (key == "num_sus") {
      c.num_sus = GetUnsigned32(value, key);
    } else if (key == "total_bandwidth") {
      c.total_bandwidth = value.is_null() ? std::nullopt
                                          : std::optional(GetReal(value, key));
    } else if (key == "tx_power_su") {
      c.tx_power_su = GetReal(value, key);
    } else if (key == "tx_power_pu") {
      c.tx_power_pu = GetReal(value, key);
    } else if (key == "mean_gain_su") {
      c.mean_gain_su = GetReal(value, key);
    } else if (key == "mean_gain_pu_su") {
      c.mean_gain_pu_su = GetReal(value, key);
    } else if (key == "noise_variance") {
      c.noise_variance = GetReal(value, key);
    } else if (key == "learning_rate") {
      c.learning_rate = GetReal(value, key);
    } else if (key == "discount_factor") {
      c.discount_factor = GetReal(value, key);
    } else if (key == "epsilon") {
      if (value.is_null() || value == "auto") {
        c.epsilon_override.reset();
      } else {
        c.epsilon_override = GetReal(value, key);
      }
    } else if (key == "exchange_interval" || key == "delta") {
      c.exchange_interval = GetUnsigned32(value, key);
    } else if (key == "num_frames") {
      c.num_frames = GetUnsigned32(value, key);
    } else if (key == "num_runs") {
      c.num_runs = GetUnsigned32(value, key);
    } else if (key == "rng_seed") {
      c.rng_seed = GetUnsigned(value, key);
    } else if (!ScenarioKeys().contains(key)) {
      Invalid(key, "unknown key");
    }
  }
}

ExperimentSetup ParseConfig(const json& doc, std::optional<std::string> scenario,
                            bool paper_scale) {
  if (!doc.is_object()) {
    throw ConfigError(ConfigError::Kind::kParse, "",
                      "config root must be a JSON object");
  }
  std::string name = std::string(kScenarioCustom);
  if (scenario) {
    name = *scenario;
  } else if (doc.contains("scenario")) {
    if (!doc["scenario"].is_string()) Invalid("scenario", "must be a string");
    name = doc["scenario"].get<std::string>();
  }

  ExperimentSetup setup;
  setup.preset = BuiltinPreset(name, paper_scale);
  ApplyConfigKeys(setup.preset.overrides, setup.config);
  ApplyConfigKeys(doc, setup.config);
  if (name == kScenarioConvergence && !doc.contains("num_sus")) {
    setup.config.num_sus = setup.config.num_channels;
  }

  if (doc.contains("schemes")) {
    const json& schemes = doc["schemes"];
    if (!schemes.is_array() || schemes.empty()) {
      Invalid("schemes", "must be a non-empty array");
    }
    setup.preset.schemes.clear();
    for (const json& item : schemes) setup.preset.schemes.push_back(ParseVariant(item));
  } else if (setup.preset.schemes.empty()) {
    setup.preset.schemes = {{Scheme::kIndependent, 0},
                            {Scheme::kCollaborative, setup.config.exchange_interval}};
  }

  if (doc.contains("sweep")) {
    const json& sweep = doc["sweep"];
    if (sweep.is_null()) {
      setup.preset.sweep.reset();
    } else {
      if (!sweep.is_array()) Invalid("sweep", "must be an array of K values");
      std::vector<std::uint32_t> ks;
      for (const json& k : sweep) {
        ks.push_back(GetUnsigned32(k, "sweep"));
        if (ks.back() == 0) Invalid("sweep", "K values must be positive");
      }
      setup.preset.sweep = std::move(ks);
    }
  }

  Validate(setup.config);
  return setup;
}

ExperimentSetup LoadConfig(const std::filesystem::path& path,
                           std::optional<std::string> scenario,
                           bool paper_scale) {
  std::ifstream in(path);
  if (!std::filesystem::is_regular_file(path) || !in) {
    throw ConfigError(ConfigError::Kind::kMissingFile, "",
                      fmt::format("cannot open config file {}", path.string()));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ConfigError(ConfigError::Kind::kParse, "",
                      fmt::format("{}: {}", path.string(), e.what()));
  }
  return ParseConfig(doc, std::move(scenario), paper_scale);
}

json ToJson(const SimConfig& c) {
  json j = {
      {"num_channels", c.num_channels},
      {"num_sus", c.num_sus},
      {"total_bandwidth", c.total_bandwidth ? json(*c.total_bandwidth) : json(nullptr)},
      {"tx_power_su", c.tx_power_su},
      {"tx_power_pu", c.tx_power_pu},
      {"mean_gain_su", c.mean_gain_su},
      {"mean_gain_pu_su", c.mean_gain_pu_su},
      {"noise_variance", c.noise_variance},
      {"learning_rate", c.learning_rate},
      {"discount_factor", c.discount_factor},
      {"epsilon", c.epsilon_override ? json(*c.epsilon_override) : json("auto")},
      {"exchange_interval", c.exchange_interval},
      {"num_frames", c.num_frames},
      {"num_runs", c.num_runs},
      {"rng_seed", c.rng_seed},
  };
  return j;
}

}  // namespace cogq
