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

#include "cogq/engine.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "cogq/rng.h"

namespace cogq {

RunTrace RunOnce(const SimConfig& config, Scheme scheme, std::uint64_t seed,
                 const FrameObserver& observer) {
  Validate(config);
  const std::uint32_t num_channels = config.num_channels;
  const std::uint32_t num_sus = config.num_sus;
  const double alpha = config.learning_rate;
  const double epsilon = config.epsilon();

  Rng channel_rng = MakeStream(seed, StreamPurpose::kChannel);
  std::vector<Rng> agent_rngs;
  agent_rngs.reserve(num_sus);
  for (std::uint32_t k = 0; k < num_sus; ++k) {
    agent_rngs.push_back(MakeStream(seed, StreamPurpose::kAgent, k));
  }

  std::vector<AgentState> agents(num_sus, AgentState(num_channels, scheme));
  std::vector<ChannelIndex> actions(num_sus);
  std::uniform_int_distribution<ChannelIndex> any_channel(0, num_channels - 1);

  RunTrace trace;
  trace.seed_used = seed;
  trace.per_frame.reserve(config.num_frames);

  for (std::uint32_t t = 0; t < config.num_frames; ++t) {
    for (std::uint32_t k = 0; k < num_sus; ++k) {
      Rng& rng = agent_rngs[k];
      if (t == 0) {
        actions[k] = any_channel(rng);
      } else if (scheme == Scheme::kIndependent) {
        actions[k] = PolicyIndependent(agents[k].qtable, rng);
      } else {
        actions[k] = PolicyCollaborative(agents[k].qtable, epsilon, rng);
      }
    }

    ChannelRealization realization = DrawRealization(config, channel_rng);
    FrameOutcome outcome = ResolveFrame(config, actions, realization);

    const bool exchange = scheme == Scheme::kCollaborative &&
                          IsExchangeFrame(t, config.exchange_interval);
    for (std::uint32_t k = 0; k < num_sus; ++k) {
      const bool success = outcome.su_success[k] != 0;
      AgentState& agent = agents[k];
      if (scheme == Scheme::kIndependent) {
        agent = IndependentUpdate(std::move(agent), actions[k], success, alpha);
      } else if (exchange) {
        agent = CollabExchangeUpdate(std::move(agent), actions[k],
                                     outcome.cs_bitmap, alpha);
      } else {
        agent = CollabGeneralUpdate(std::move(agent), actions[k], success, alpha);
      }
    }

    if (observer) observer(t, outcome, agents);
    if (t + 1 == config.num_frames) {
      trace.final_realization = std::move(realization);
    }
    trace.per_frame.push_back(std::move(outcome));
  }
  trace.final_agents = std::move(agents);
  return trace;
}

void ParallelFor(std::size_t count, unsigned threads,
                 const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1u), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<RunTrace> RunBatch(const SimConfig& config, Scheme scheme,
                               std::size_t num_runs, unsigned threads) {
  Validate(config);
  std::vector<RunTrace> traces(num_runs);
  ParallelFor(num_runs, threads, [&](std::size_t i) {
    traces[i] = RunOnce(config, scheme, RunSeed(config.rng_seed, i));
  });
  return traces;
}

namespace {

void Expect(bool ok, std::uint32_t frame, const char* what) {
  if (!ok) throw InvariantError(fmt::format("frame {}: {}", frame, what));
}

}  // namespace

void CheckTrace(const SimConfig& config, const RunTrace& trace) {
  const std::uint32_t num_channels = config.num_channels;
  const std::uint32_t num_sus = config.num_sus;
  if (trace.per_frame.size() != config.num_frames) {
    throw InvariantError(fmt::format("trace has {} frames, expected {}",
                                     trace.per_frame.size(), config.num_frames));
  }
  for (std::uint32_t t = 0; t < trace.per_frame.size(); ++t) {
    const FrameOutcome& f = trace.per_frame[t];
    Expect(f.actions.size() == num_sus && f.su_success.size() == num_sus &&
               f.occupancy.size() == num_channels &&
               f.cs_bitmap.size() == num_channels,
           t, "dimension mismatch");
    Expect(std::accumulate(f.occupancy.begin(), f.occupancy.end(), 0ull) ==
               num_sus,
           t, "occupancy does not sum to K");
    for (std::uint32_t m = 0; m < num_channels; ++m) {
      Expect((f.cs_bitmap[m] == 1) == (f.occupancy[m] == 1), t,
             "CS bit disagrees with occupancy");
    }
    std::uint32_t successes = 0;
    for (std::uint32_t k = 0; k < num_sus; ++k) {
      Expect(f.actions[k] < num_channels, t, "action out of range");
      Expect(f.su_success[k] == f.cs_bitmap[f.actions[k]], t,
             "success flag disagrees with CS bitmap");
      successes += f.su_success[k];
    }
    Expect(successes == f.NumSuccessful(), t, "success count mismatch");
    Expect(successes <= std::min(num_channels, num_sus), t,
           "more successes than min(M, K)");
    Expect(std::isfinite(f.throughput) && f.throughput >= 0.0, t,
           "throughput not a non-negative number");
  }
  const auto last = static_cast<std::uint32_t>(trace.per_frame.size() - 1);
  Expect(trace.final_agents.size() == num_sus, last, "agent count mismatch");
  for (const AgentState& a : trace.final_agents) {
    for (double q : a.qtable.values()) {
      Expect(q >= -1.0 && q <= 1.0, last, "Q-value outside [-1, 1]");
    }
    Expect(!a.succeeded || a.qtable[a.last_action] > 0.0, last,
           "locked agent without a positive value on its channel");
  }
}

}  // namespace cogq
