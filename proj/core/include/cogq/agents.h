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

#ifndef COGQ_AGENTS_H_
#define COGQ_AGENTS_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cogq/environment.h"
#include "cogq/rng.h"

namespace cogq {

enum class Scheme { kIndependent, kCollaborative };

std::string_view SchemeName(Scheme scheme);

// One value per channel. With a zero discount factor the value of an action
// does not depend on the previous action, so the table has no state axis.
class QTable {
 public:
  QTable() = default;
  explicit QTable(std::uint32_t num_channels) : values_(num_channels, 0.0) {}
  explicit QTable(std::vector<double> values) : values_(std::move(values)) {}

  std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }
  double operator[](ChannelIndex m) const { return values_[m]; }
  double& operator[](ChannelIndex m) { return values_[m]; }
  std::span<const double> values() const { return values_; }

  bool HasPositive() const;
  // Index of the largest value; ties are broken uniformly at random.
  ChannelIndex ArgMax(Rng& rng) const;

  bool operator==(const QTable&) const = default;

 private:
  std::vector<double> values_;
};

struct AgentState {
  AgentState() = default;
  AgentState(std::uint32_t num_channels, Scheme scheme)
      : qtable(num_channels), scheme(scheme) {}

  QTable qtable;
  ChannelIndex last_action = 0;
  // Locked onto a channel: set once the agent holds a positive value, after
  // which the table is frozen.
  bool succeeded = false;
  Scheme scheme = Scheme::kIndependent;

  bool operator==(const AgentState&) const = default;
};

// Zero-discount Q-learning step: q + alpha * (reward - q).
inline double QUpdate(double q, double reward, double alpha) {
  return q + alpha * (reward - q);
}

// +1 on a successful transmission, -1 otherwise.
inline int IndependentReward(bool success) { return success ? 1 : -1; }

// Per-channel reward at an information-exchange frame for channel `j`, given
// its CS bit and whether it is the channel the agent transmitted on.
int ExchangeReward(bool cs_bit, bool is_chosen);

// Reward at a general frame: +1 when the agent's own transmission went
// through, 0 otherwise.
inline int GeneralReward(bool own_success) { return own_success ? 1 : 0; }

// Independent scheme: exploit a positive value if one exists, otherwise
// pick any channel uniformly.
ChannelIndex PolicyIndependent(const QTable& qtable, Rng& rng);

// Collaborative scheme. A positive value is always exploited. Otherwise,
// with probability 1 - epsilon take the argmax, and with probability
// epsilon explore uniformly over channels whose value is >= 0 (not known to
// be taken), or over all channels if there are none.
ChannelIndex PolicyCollaborative(const QTable& qtable, double epsilon, Rng& rng);

// Independent update after every frame. Locked agents are left untouched.
AgentState IndependentUpdate(AgentState agent, ChannelIndex chosen,
                             bool success, double alpha);

// Collaborative update at an information-exchange frame, using the CS bitmap
// broadcast for that frame. Throws ConfigError if the bitmap length differs
// from the table size.
AgentState CollabExchangeUpdate(AgentState agent, ChannelIndex chosen,
                                std::span<const std::uint8_t> cs_bitmap,
                                double alpha);

// Collaborative update at a general frame from the agent's own outcome.
AgentState CollabGeneralUpdate(AgentState agent, ChannelIndex chosen,
                               bool own_success, double alpha);

}  // namespace cogq

#endif  // COGQ_AGENTS_H_
