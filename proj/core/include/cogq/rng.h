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

#ifndef COGQ_RNG_H_
#define COGQ_RNG_H_

#include <cstdint>
#include <random>

namespace cogq {

using Rng = std::mt19937_64;

// Independent streams inside one run. The numeric values are part of the
// reproducibility contract and must not change.
enum class StreamPurpose : std::uint64_t {
  kChannel = 1,  // fading draws
  kAgent = 2,    // one stream per agent for action selection
};

// SplitMix64 finalizer.
constexpr std::uint64_t MixBits(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for `index` under `parent`. Seeds form a tree:
// master -> run i -> (purpose, agent k), so any node can be rebuilt
// without replaying its siblings.
constexpr std::uint64_t DeriveSeed(std::uint64_t parent, std::uint64_t index) {
  return MixBits(MixBits(parent) ^ MixBits(index + 0x632be59bd9b4e019ULL));
}

// Seed of run `run_index` in a batch started from `master_seed`.
constexpr std::uint64_t RunSeed(std::uint64_t master_seed,
                                std::uint64_t run_index) {
  return DeriveSeed(master_seed, run_index);
}

inline Rng MakeStream(std::uint64_t run_seed, StreamPurpose purpose,
                      std::uint64_t index = 0) {
  return Rng(DeriveSeed(DeriveSeed(run_seed, static_cast<std::uint64_t>(purpose)),
                        index));
}

}  // namespace cogq

#endif  // COGQ_RNG_H_
