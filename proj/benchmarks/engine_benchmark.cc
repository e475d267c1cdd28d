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

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "cogq/agents.h"
#include "cogq/engine.h"
#include "cogq/environment.h"

namespace cogq {
namespace {

SimConfig Config(std::int64_t m, std::int64_t k) {
  SimConfig c;
  c.num_channels = static_cast<std::uint32_t>(m);
  c.num_sus = static_cast<std::uint32_t>(k);
  return c;
}

void BM_DrawRealization(benchmark::State& state) {
  const SimConfig c = Config(state.range(0), state.range(1));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(DrawRealization(c, rng));
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0) * state.range(1));
}
BENCHMARK(BM_DrawRealization)->Args({50, 50})->Args({300, 300})->Args({300, 550});

void BM_ResolveFrame(benchmark::State& state) {
  const SimConfig c = Config(state.range(0), state.range(1));
  Rng rng(2);
  const ChannelRealization r = DrawRealization(c, rng);
  std::vector<ChannelIndex> actions(c.num_sus);
  std::uniform_int_distribution<ChannelIndex> pick(0, c.num_channels - 1);
  for (auto& a : actions) a = pick(rng);
  for (auto _ : state) benchmark::DoNotOptimize(ResolveFrame(c, actions, r));
}
BENCHMARK(BM_ResolveFrame)->Args({50, 50})->Args({300, 300})->Args({300, 550});

void BM_PolicyCollaborative(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  std::vector<double> values(m, 0.0);
  for (std::uint32_t i = 0; i < m; i += 3) values[i] = -0.2;
  const QTable q(values);
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(PolicyCollaborative(q, 0.1, rng));
}
BENCHMARK(BM_PolicyCollaborative)->Arg(50)->Arg(300);

void BM_RunOnce(benchmark::State& state) {
  SimConfig c = Config(state.range(0), state.range(1));
  c.exchange_interval = 2;
  const auto scheme = state.range(2) == 0 ? Scheme::kIndependent : Scheme::kCollaborative;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(RunOnce(c, scheme, seed++));
}
BENCHMARK(BM_RunOnce)
    ->Args({50, 50, 0})
    ->Args({50, 50, 1})
    ->Args({300, 300, 0})
    ->Args({300, 300, 1})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cogq

BENCHMARK_MAIN();
