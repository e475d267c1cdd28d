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

#include "cogq/metrics.h"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace cogq {

std::string SchemeVariant::Label() const {
  if (scheme == Scheme::kIndependent) return std::string(SchemeName(scheme));
  return fmt::format("{} (delta={})", SchemeName(scheme), delta);
}

namespace {

void RequireTraces(std::span<const RunTrace> traces) {
  if (traces.empty()) throw std::invalid_argument("no traces to aggregate");
  for (const RunTrace& t : traces) {
    if (t.per_frame.empty()) throw std::invalid_argument("empty trace");
  }
}

}  // namespace

std::vector<double> AccessingSus(std::span<const RunTrace> traces) {
  RequireTraces(traces);
  const std::size_t frames = traces.front().per_frame.size();
  std::vector<double> curve(frames, 0.0);
  for (const RunTrace& trace : traces) {
    if (trace.per_frame.size() != frames) {
      throw std::invalid_argument("traces differ in length");
    }
    for (std::size_t t = 0; t < frames; ++t) {
      curve[t] += trace.per_frame[t].NumSuccessful();
    }
  }
  for (double& v : curve) v /= static_cast<double>(traces.size());
  return curve;
}

BlockingProbabilities ComputeBlockingProbabilities(
    std::span<const RunTrace> traces, const SimConfig& config) {
  RequireTraces(traces);
  BlockingProbabilities p;
  for (const RunTrace& trace : traces) {
    const FrameOutcome& last = trace.per_frame.back();
    p.su += 1.0 - static_cast<double>(last.NumSuccessful()) / config.num_sus;
    p.pu += static_cast<double>(last.NumCollidedChannels()) / config.num_channels;
  }
  p.su /= static_cast<double>(traces.size());
  p.pu /= static_cast<double>(traces.size());
  return p;
}

double IdentityBaselineThroughput(const SimConfig& config,
                                  const ChannelRealization& realization) {
  const std::uint32_t pairs = std::min(config.num_channels, config.num_sus);
  double total = 0.0;
  for (std::uint32_t k = 0; k < pairs; ++k) {
    total += SuRate(config, realization.su_gain(k, k), realization.pu_gain(k, k), 1);
  }
  return total;
}

NormalizedThroughput ComputeNormalizedThroughput(
    std::span<const RunTrace> traces, const SimConfig& config) {
  RequireTraces(traces);
  NormalizedThroughput result;
  for (const RunTrace& trace : traces) {
    const double baseline =
        IdentityBaselineThroughput(config, trace.final_realization);
    if (baseline <= 0.0) {
      ++result.degenerate_runs;
      continue;
    }
    result.value += trace.per_frame.back().throughput / baseline;
  }
  result.value /= static_cast<double>(traces.size());
  return result;
}

MetricsRecord Summarize(std::span<const RunTrace> traces,
                        const SimConfig& config) {
  MetricsRecord r;
  r.accessing_sus_per_frame = AccessingSus(traces);
  const BlockingProbabilities blocking = ComputeBlockingProbabilities(traces, config);
  r.su_blocking_prob = blocking.su;
  r.pu_blocking_prob = blocking.pu;
  const NormalizedThroughput nt = ComputeNormalizedThroughput(traces, config);
  r.normalized_throughput = nt.value;
  r.degenerate_baselines = nt.degenerate_runs;
  return r;
}

SimConfig ConfigFor(const SimConfig& base, const SchemeVariant& variant) {
  SimConfig c = base;
  if (variant.scheme == Scheme::kCollaborative) c.exchange_interval = variant.delta;
  return c;
}

std::vector<ConvergencePoint> ConvergenceExperiment(
    const SimConfig& base, std::span<const SchemeVariant> variants,
    std::size_t runs, unsigned threads) {
  std::vector<ConvergencePoint> out;
  out.reserve(variants.size());
  for (const SchemeVariant& v : variants) {
    const SimConfig cfg = ConfigFor(base, v);
    const auto traces = RunBatch(cfg, v.scheme, runs, threads);
    for (const RunTrace& t : traces) CheckTrace(cfg, t);
    out.push_back({v, AccessingSus(traces)});
  }
  return out;
}

std::vector<SweepPoint> SweepNumSus(const SimConfig& base,
                                    std::span<const SchemeVariant> variants,
                                    std::span<const std::uint32_t> k_values,
                                    std::size_t runs, unsigned threads) {
  std::vector<SweepPoint> out;
  out.reserve(variants.size() * k_values.size());
  for (const SchemeVariant& v : variants) {
    for (std::uint32_t k : k_values) {
      SimConfig cfg = ConfigFor(base, v);
      cfg.num_sus = k;
      const auto traces = RunBatch(cfg, v.scheme, runs, threads);
      for (const RunTrace& t : traces) CheckTrace(cfg, t);
      out.push_back({v, k, Summarize(traces, cfg)});
    }
  }
  return out;
}

}  // namespace cogq
