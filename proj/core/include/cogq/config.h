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

#ifndef COGQ_CONFIG_H_
#define COGQ_CONFIG_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cogq {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or inconsistent configuration. `key()` names the offending
// parameter when there is one.
class ConfigError : public Error {
 public:
  enum class Kind { kMissingFile, kParse, kInvalid };

  ConfigError(Kind kind, std::string key, const std::string& message);

  Kind kind() const { return kind_; }
  const std::string& key() const { return key_; }

 private:
  Kind kind_;
  std::string key_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A simulation result broke one of the model's structural invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Converts a power ratio in decibels to linear scale.
double DbToLinear(double db);

// Scenario parameters for one network. Defaults are the reference
// parameter set: 300 subchannels, 10 dB transmit powers, unit noise,
// mean fading power 0.1 and 50 frames per run.
struct SimConfig {
  std::uint32_t num_channels = 300;
  std::uint32_t num_sus = 300;
  // Total primary-network bandwidth B. Unset means B = num_channels, so the
  // per-channel share B/M is 1 and rates come out in bit/s/Hz.
  std::optional<double> total_bandwidth;
  double tx_power_su = 10.0;  // linear (10 dB)
  double tx_power_pu = 10.0;  // linear (10 dB)
  double mean_gain_su = 0.1;
  double mean_gain_pu_su = 0.1;
  double noise_variance = 1.0;
  double learning_rate = 0.2;
  double discount_factor = 0.0;
  // Unset means the automatic rule: 0.8 when M > K, otherwise 0.1.
  std::optional<double> epsilon_override;
  std::uint32_t exchange_interval = 2;
  std::uint32_t num_frames = 50;
  std::uint32_t num_runs = 100;
  std::uint64_t rng_seed = 1;

  double epsilon() const;
  // B/N with one primary user per subchannel.
  double bandwidth_per_channel() const;
};

// Throws ConfigError(kInvalid) naming the first violated constraint.
void Validate(const SimConfig& config);

}  // namespace cogq

#endif  // COGQ_CONFIG_H_
