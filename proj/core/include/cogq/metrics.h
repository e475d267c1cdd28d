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

#ifndef COGQ_METRICS_H_
#define COGQ_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cogq/agents.h"
#include "cogq/config.h"
#include "cogq/engine.h"

namespace cogq {

// A scheme plus its exchange interval (ignored for kIndependent).
struct SchemeVariant {
  Scheme scheme = Scheme::kIndependent;
  std::uint32_t delta = 0;

  std::string Label() const;
  bool operator==(const SchemeVariant&) const = default;
};

struct BlockingProbabilities {
  double su = 0.0;
  double pu = 0.0;
};

struct NormalizedThroughput {
  double value = 0.0;
  // Runs whose baseline rate was zero; they contribute 0 to the mean.
  std::size_t degenerate_runs = 0;
};

struct MetricsRecord {
  std::vector<double> accessing_sus_per_frame;
  double su_blocking_prob = 0.0;
  double pu_blocking_prob = 0.0;
  double normalized_throughput = 0.0;
  std::size_t degenerate_baselines = 0;
};

// Mean over runs of the number of successful SUs, per frame.
std::vector<double> AccessingSus(std::span<const RunTrace> traces);

// At the last frame, averaged over runs: the fraction of SUs not
// transmitting successfully and the fraction of channels carrying two or
// more SUs.
BlockingProbabilities ComputeBlockingProbabilities(
    std::span<const RunTrace> traces, const SimConfig& config);

// Sum rate of min(M, K) SUs placed one per channel by the identity matching
// SU k -> channel k.
double IdentityBaselineThroughput(const SimConfig& config,
                                  const ChannelRealization& realization);

// Mean over runs of last-frame throughput divided by the identity baseline
// on the same fading draw. Not clamped: a single run may exceed 1.
NormalizedThroughput ComputeNormalizedThroughput(
    std::span<const RunTrace> traces, const SimConfig& config);

MetricsRecord Summarize(std::span<const RunTrace> traces,
                        const SimConfig& config);

// Configuration for one variant: sets the exchange interval.
SimConfig ConfigFor(const SimConfig& base, const SchemeVariant& variant);

struct ConvergencePoint {
  SchemeVariant variant;
  std::vector<double> mean_accessing_sus;
};

struct SweepPoint {
  SchemeVariant variant;
  std::uint32_t num_sus = 0;
  MetricsRecord metrics;
};

// Convergence curves for each variant at the configured K. Every trace is
// passed through CheckTrace.
std::vector<ConvergencePoint> ConvergenceExperiment(
    const SimConfig& base, std::span<const SchemeVariant> variants,
    std::size_t runs, unsigned threads = 1);

// One record per (variant, K), variants in the outer loop. Epsilon follows
// the configured rule at each K.
std::vector<SweepPoint> SweepNumSus(const SimConfig& base,
                                    std::span<const SchemeVariant> variants,
                                    std::span<const std::uint32_t> k_values,
                                    std::size_t runs, unsigned threads = 1);

}  // namespace cogq

#endif  // COGQ_METRICS_H_
