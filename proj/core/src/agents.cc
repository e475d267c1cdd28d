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

#include "cogq/agents.h"

#include <algorithm>
#include <random>

#include <fmt/format.h>

namespace cogq {

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kIndependent:
      return "independent";
    case Scheme::kCollaborative:
      return "collaborative";
  }
  return "unknown";
}

bool QTable::HasPositive() const {
  return std::any_of(values_.begin(), values_.end(),
                     [](double v) { return v > 0.0; });
}

namespace {

ChannelIndex UniformIndex(std::uint32_t n, Rng& rng) {
  return std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng);
}

// Uniform draw among indices whose value satisfies `pred`; `count` is the
// number of such indices and must be positive.
template <typename Pred>
ChannelIndex PickAmong(std::span<const double> values, std::uint32_t count,
                       Pred pred, Rng& rng) {
  std::uint32_t target = UniformIndex(count, rng);
  for (std::uint32_t m = 0; m < values.size(); ++m) {
    if (pred(values[m]) && target-- == 0) return m;
  }
  return 0;  // unreachable when count is correct
}

}  // namespace

ChannelIndex QTable::ArgMax(Rng& rng) const {
  const double best = *std::max_element(values_.begin(), values_.end());
  const auto ties = static_cast<std::uint32_t>(
      std::count(values_.begin(), values_.end(), best));
  if (ties == 1) {
    return static_cast<ChannelIndex>(
        std::find(values_.begin(), values_.end(), best) - values_.begin());
  }
  return PickAmong(values_, ties, [best](double v) { return v == best; }, rng);
}

int ExchangeReward(bool cs_bit, bool is_chosen) {
  if (!cs_bit) return 0;
  return is_chosen ? 1 : -1;
}

ChannelIndex PolicyIndependent(const QTable& qtable, Rng& rng) {
  if (qtable.HasPositive()) return qtable.ArgMax(rng);
  return UniformIndex(qtable.size(), rng);
}

ChannelIndex PolicyCollaborative(const QTable& qtable, double epsilon,
                                 Rng& rng) {
  if (qtable.HasPositive()) return qtable.ArgMax(rng);
  const double x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (x < 1.0 - epsilon) return qtable.ArgMax(rng);

  auto values = qtable.values();
  auto not_taken = [](double v) { return v >= 0.0; };
  const auto candidates = static_cast<std::uint32_t>(
      std::count_if(values.begin(), values.end(), not_taken));
  if (candidates == 0) return UniformIndex(qtable.size(), rng);
  return PickAmong(values, candidates, not_taken, rng);
}

namespace {

void RewardChosen(AgentState& agent, ChannelIndex chosen, int reward,
                  double alpha) {
  double& q = agent.qtable[chosen];
  q = QUpdate(q, reward, alpha);
  if (q > 0.0) agent.succeeded = true;
}

}  // namespace

AgentState IndependentUpdate(AgentState agent, ChannelIndex chosen,
                             bool success, double alpha) {
  agent.last_action = chosen;
  if (agent.succeeded) return agent;
  RewardChosen(agent, chosen, IndependentReward(success), alpha);
  return agent;
}

AgentState CollabExchangeUpdate(AgentState agent, ChannelIndex chosen,
                                std::span<const std::uint8_t> cs_bitmap,
                                double alpha) {
  if (cs_bitmap.size() != agent.qtable.size()) {
    throw ConfigError(ConfigError::Kind::kInvalid, "num_channels",
                      fmt::format("CS bitmap has {} bits, Q-table has {}",
                                  cs_bitmap.size(), agent.qtable.size()));
  }
  agent.last_action = chosen;
  if (agent.succeeded) return agent;

  if (cs_bitmap[chosen]) {
    RewardChosen(agent, chosen, ExchangeReward(true, true), alpha);
    return agent;
  }
  for (ChannelIndex j = 0; j < cs_bitmap.size(); ++j) {
    double& q = agent.qtable[j];
    q = QUpdate(q, ExchangeReward(cs_bitmap[j] != 0, j == chosen), alpha);
  }
  return agent;
}

AgentState CollabGeneralUpdate(AgentState agent, ChannelIndex chosen,
                               bool own_success, double alpha) {
  agent.last_action = chosen;
  if (agent.succeeded) return agent;
  RewardChosen(agent, chosen, GeneralReward(own_success), alpha);
  return agent;
}

}  // namespace cogq
