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

#ifndef COGQ_ENVIRONMENT_H_
#define COGQ_ENVIRONMENT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cogq/config.h"
#include "cogq/rng.h"

namespace cogq {

using ChannelIndex = std::uint32_t;

// Per-frame fading power gains for every (channel, SU) pair, stored
// channel-major.
class ChannelRealization {
 public:
  ChannelRealization() = default;
  ChannelRealization(std::uint32_t num_channels, std::uint32_t num_sus);

  std::uint32_t num_channels() const { return num_channels_; }
  std::uint32_t num_sus() const { return num_sus_; }

  // CBS -> SU gain g.
  double su_gain(ChannelIndex m, std::uint32_t k) const {
    return su_gain_[Offset(m, k)];
  }
  // PBS -> SU gain z.
  double pu_gain(ChannelIndex m, std::uint32_t k) const {
    return pu_gain_[Offset(m, k)];
  }
  double& su_gain(ChannelIndex m, std::uint32_t k) {
    return su_gain_[Offset(m, k)];
  }
  double& pu_gain(ChannelIndex m, std::uint32_t k) {
    return pu_gain_[Offset(m, k)];
  }

  std::span<const double> su_gains() const { return su_gain_; }
  std::span<const double> pu_gains() const { return pu_gain_; }

  bool operator==(const ChannelRealization&) const = default;

 private:
  std::size_t Offset(ChannelIndex m, std::uint32_t k) const {
    return static_cast<std::size_t>(m) * num_sus_ + k;
  }

  std::uint32_t num_channels_ = 0;
  std::uint32_t num_sus_ = 0;
  std::vector<double> su_gain_;
  std::vector<double> pu_gain_;
};

// Result of one frame of simultaneous transmissions.
struct FrameOutcome {
  std::vector<ChannelIndex> actions;     // length K
  std::vector<std::uint32_t> occupancy;  // length M, SUs per channel
  std::vector<std::uint8_t> cs_bitmap;   // length M, 1 iff exactly one SU
  std::vector<std::uint8_t> su_success;  // length K
  double throughput = 0.0;

  std::uint32_t NumSuccessful() const;
  // Channels carrying two or more SUs.
  std::uint32_t NumCollidedChannels() const;

  bool operator==(const FrameOutcome&) const = default;
};

// 1 iff exactly one SU is on the channel.
inline int AccessIndicator(std::uint32_t occupancy_count) {
  return occupancy_count == 1 ? 1 : 0;
}

// Shannon rate of one SU on one channel:
//   (B/M) * indicator * log2(1 + P g / (P_pu z + sigma^2)).
double SuRate(const SimConfig& config, double su_gain, double pu_gain,
              int indicator);

// Counts occupancy, derives the CS bitmap and success flags, and sums the
// rates of the SUs that are alone on their channel. Throws ConfigError on
// any dimension mismatch or out-of-range action.
FrameOutcome ResolveFrame(const SimConfig& config,
                          std::span<const ChannelIndex> actions,
                          const ChannelRealization& realization);

// Draws i.i.d. exponential power gains (Rayleigh amplitude fading) with the
// configured means. The SU gain matrix is filled before the PU gain matrix.
ChannelRealization DrawRealization(const SimConfig& config, Rng& rng);

}  // namespace cogq

#endif  // COGQ_ENVIRONMENT_H_
