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

#include "cogq/environment.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

namespace cogq {

ChannelRealization::ChannelRealization(std::uint32_t num_channels,
                                       std::uint32_t num_sus)
    : num_channels_(num_channels),
      num_sus_(num_sus),
      su_gain_(static_cast<std::size_t>(num_channels) * num_sus, 0.0),
      pu_gain_(static_cast<std::size_t>(num_channels) * num_sus, 0.0) {}

std::uint32_t FrameOutcome::NumSuccessful() const {
  return static_cast<std::uint32_t>(
      std::count(cs_bitmap.begin(), cs_bitmap.end(), std::uint8_t{1}));
}

std::uint32_t FrameOutcome::NumCollidedChannels() const {
  return static_cast<std::uint32_t>(std::count_if(
      occupancy.begin(), occupancy.end(), [](std::uint32_t n) { return n >= 2; }));
}

double SuRate(const SimConfig& config, double su_gain, double pu_gain,
              int indicator) {
  if (indicator == 0) return 0.0;
  const double sinr = config.tx_power_su * su_gain /
                      (config.tx_power_pu * pu_gain + config.noise_variance);
  // log1p keeps full relative precision at low SINR.
  return config.bandwidth_per_channel() * std::log1p(sinr) / std::numbers::ln2;
}

FrameOutcome ResolveFrame(const SimConfig& config,
                          std::span<const ChannelIndex> actions,
                          const ChannelRealization& realization) {
  const std::uint32_t num_channels = config.num_channels;
  if (actions.size() != config.num_sus) {
    throw ConfigError(ConfigError::Kind::kInvalid, "num_sus",
                      fmt::format("action profile has {} entries, expected {}",
                                  actions.size(), config.num_sus));
  }
  if (realization.num_channels() != num_channels ||
      realization.num_sus() != config.num_sus) {
    throw ConfigError(
        ConfigError::Kind::kInvalid, "num_channels",
        fmt::format("realization is {}x{}, expected {}x{}",
                    realization.num_channels(), realization.num_sus(),
                    num_channels, config.num_sus));
  }

  FrameOutcome out;
  out.actions.assign(actions.begin(), actions.end());
  out.occupancy.assign(num_channels, 0);
  for (ChannelIndex m : actions) {
    if (m >= num_channels) {
      throw ConfigError(ConfigError::Kind::kInvalid, "num_channels",
                        fmt::format("action {} out of range", m));
    }
    ++out.occupancy[m];
  }
  out.cs_bitmap.resize(num_channels);
  for (std::uint32_t m = 0; m < num_channels; ++m) {
    out.cs_bitmap[m] = static_cast<std::uint8_t>(AccessIndicator(out.occupancy[m]));
  }
  out.su_success.resize(actions.size());
  for (std::uint32_t k = 0; k < actions.size(); ++k) {
    const ChannelIndex m = actions[k];
    out.su_success[k] = out.cs_bitmap[m];
    if (out.su_success[k]) {
      out.throughput += SuRate(config, realization.su_gain(m, k),
                               realization.pu_gain(m, k), 1);
    }
  }
  return out;
}

ChannelRealization DrawRealization(const SimConfig& config, Rng& rng) {
  ChannelRealization r(config.num_channels, config.num_sus);
  std::exponential_distribution<double> su(1.0 / config.mean_gain_su);
  std::exponential_distribution<double> pu(1.0 / config.mean_gain_pu_su);
  for (std::uint32_t m = 0; m < config.num_channels; ++m) {
    for (std::uint32_t k = 0; k < config.num_sus; ++k) r.su_gain(m, k) = su(rng);
  }
  for (std::uint32_t m = 0; m < config.num_channels; ++m) {
    for (std::uint32_t k = 0; k < config.num_sus; ++k) r.pu_gain(m, k) = pu(rng);
  }
  return r;
}

}  // namespace cogq
