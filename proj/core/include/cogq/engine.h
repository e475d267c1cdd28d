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

#ifndef COGQ_ENGINE_H_
#define COGQ_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cogq/agents.h"
#include "cogq/config.h"
#include "cogq/environment.h"

namespace cogq {

struct RunTrace {
  std::vector<FrameOutcome> per_frame;
  std::vector<AgentState> final_agents;
  // Fading draw of the last frame, kept for throughput normalization.
  ChannelRealization final_realization;
  std::uint64_t seed_used = 0;

  bool operator==(const RunTrace&) const = default;
};

// Called after the updates of every frame with the frame index, its outcome
// and the post-update agent states.
using FrameObserver = std::function<void(
    std::uint32_t frame, const FrameOutcome& outcome,
    std::span<const AgentState> agents)>;

// Frame t is an information-exchange frame iff t mod (delta + 1) == 0 and
// t != 0. With delta = 0 every frame after the first exchanges.
constexpr bool IsExchangeFrame(std::uint64_t t, std::uint32_t delta) {
  return t != 0 && t % (static_cast<std::uint64_t>(delta) + 1) == 0;
}

// Simulates `config.num_frames` frames of one network. Frame 0 is a uniform
// random pick for every agent. Collaborative agents see the CS bitmap of an
// exchange frame right after it is resolved, before the next selection.
RunTrace RunOnce(const SimConfig& config, Scheme scheme, std::uint64_t seed,
                 const FrameObserver& observer = {});

// Runs `num_runs` independent trials; trial i uses
// RunSeed(config.rng_seed, i). The result does not depend on `threads`.
std::vector<RunTrace> RunBatch(const SimConfig& config, Scheme scheme,
                               std::size_t num_runs, unsigned threads = 1);

// Runs `fn(i)` for i in [0, count) over at most `threads` workers.
void ParallelFor(std::size_t count, unsigned threads,
                 const std::function<void(std::size_t)>& fn);

// Structural checks on a finished trace; throws InvariantError.
void CheckTrace(const SimConfig& config, const RunTrace& trace);

}  // namespace cogq

#endif  // COGQ_ENGINE_H_
