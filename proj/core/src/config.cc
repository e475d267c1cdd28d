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

#include "cogq/config.h"

#include <cmath>

#include <fmt/format.h>

namespace cogq {

ConfigError::ConfigError(Kind kind, std::string key, const std::string& message)
    : Error(key.empty() ? message : fmt::format("{}: {}", key, message)),
      kind_(kind),
      key_(std::move(key)) {}

double DbToLinear(double db) { return std::pow(10.0, db / 10.0); }

double SimConfig::epsilon() const {
  if (epsilon_override) return *epsilon_override;
  return num_channels > num_sus ? 0.8 : 0.1;
}

double SimConfig::bandwidth_per_channel() const {
  if (!total_bandwidth) return 1.0;
  return *total_bandwidth / static_cast<double>(num_channels);
}

namespace {

void Require(bool ok, const char* key, const char* what) {
  if (!ok) throw ConfigError(ConfigError::Kind::kInvalid, key, what);
}

bool PositiveFinite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void Validate(const SimConfig& c) {
  Require(c.num_channels > 0, "num_channels", "must be a positive integer");
  Require(c.num_sus > 0, "num_sus", "must be a positive integer");
  if (c.total_bandwidth) {
    Require(PositiveFinite(*c.total_bandwidth), "total_bandwidth",
            "must be positive");
  }
  Require(PositiveFinite(c.tx_power_su), "tx_power_su", "must be positive");
  Require(PositiveFinite(c.tx_power_pu), "tx_power_pu", "must be positive");
  Require(PositiveFinite(c.mean_gain_su), "mean_gain_su", "must be positive");
  Require(PositiveFinite(c.mean_gain_pu_su), "mean_gain_pu_su",
          "must be positive");
  Require(PositiveFinite(c.noise_variance), "noise_variance",
          "must be positive");
  Require(c.learning_rate > 0.0 && c.learning_rate <= 1.0, "learning_rate",
          "must lie in (0, 1]");
  Require(c.discount_factor == 0.0, "discount_factor", "must be exactly 0");
  if (c.epsilon_override) {
    Require(*c.epsilon_override >= 0.0 && *c.epsilon_override <= 1.0,
            "epsilon", "must lie in [0, 1]");
  }
  Require(c.num_frames > 0, "num_frames", "must be a positive integer");
  Require(c.num_runs > 0, "num_runs", "must be a positive integer");
}

}  // namespace cogq
