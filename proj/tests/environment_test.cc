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

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace cogq {
namespace {

SimConfig SmallConfig(std::uint32_t m, std::uint32_t k) {
  SimConfig c;
  c.num_channels = m;
  c.num_sus = k;
  return c;
}

// Fills every gain with the same values.
ChannelRealization Flat(std::uint32_t m, std::uint32_t k, double g, double z) {
  ChannelRealization r(m, k);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      r.su_gain(i, j) = g;
      r.pu_gain(i, j) = z;
    }
  }
  return r;
}

TEST(AccessIndicatorTest, OnlySoleOccupantCounts) {
  EXPECT_EQ(AccessIndicator(1), 1);
  EXPECT_EQ(AccessIndicator(0), 0);
  EXPECT_EQ(AccessIndicator(3), 0);
}

TEST(SuRateTest, ReferenceParameters) {
  const SimConfig c;  // P = P_pu = 10, sigma^2 = 1, B/N = 1
  // log2(1 + 1/2), 40-digit reference.
  EXPECT_NEAR(SuRate(c, 0.1, 0.1, 1), 0.58496250072115618145, 1e-15);
}

TEST(SuRateTest, IndicatorAndZeroGainAnnihilate) {
  const SimConfig c;
  EXPECT_EQ(SuRate(c, 0.7, 0.1, 0), 0.0);
  EXPECT_EQ(SuRate(c, 0.0, 0.1, 1), 0.0);
}

TEST(SuRateTest, BandwidthShareScalesRate) {
  SimConfig c;
  c.num_channels = 4;
  c.total_bandwidth = 8.0;
  EXPECT_NEAR(SuRate(c, 0.1, 0.1, 1), 2.0 * 0.58496250072115618145, 1e-14);
}

TEST(SuRateTest, MonotoneInGains) {
  const SimConfig c;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.001, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const double g = u(rng), z = u(rng), d = u(rng) * 0.1;
    EXPECT_LT(SuRate(c, g, z, 1), SuRate(c, g + d, z, 1));
    EXPECT_GT(SuRate(c, g, z, 1), SuRate(c, g, z + d, 1));
  }
}

TEST(ResolveFrameTest, TwoOnOneChannel) {
  const SimConfig c = SmallConfig(3, 3);
  const std::vector<ChannelIndex> actions = {0, 1, 1};
  const FrameOutcome f = ResolveFrame(c, actions, Flat(3, 3, 0.1, 0.1));
  EXPECT_EQ(f.occupancy, (std::vector<std::uint32_t>{1, 2, 0}));
  EXPECT_EQ(f.cs_bitmap, (std::vector<std::uint8_t>{1, 0, 0}));
  EXPECT_EQ(f.su_success, (std::vector<std::uint8_t>{1, 0, 0}));
  EXPECT_EQ(f.NumCollidedChannels(), 1u);
  EXPECT_NEAR(f.throughput, 0.58496250072115618145, 1e-15);
}

TEST(ResolveFrameTest, SingleSuCannotCollide) {
  const SimConfig c = SmallConfig(2, 1);
  ChannelRealization r = Flat(2, 1, 0.3, 0.2);
  r.su_gain(0, 0) = 0.2;
  r.pu_gain(0, 0) = 0.05;
  const std::vector<ChannelIndex> actions = {0};
  const FrameOutcome f = ResolveFrame(c, actions, r);
  EXPECT_EQ(f.cs_bitmap, (std::vector<std::uint8_t>{1, 0}));
  // log2(1 + 2 / 1.5)
  EXPECT_NEAR(f.throughput, 1.2223924213364479260, 1e-14);
  EXPECT_EQ(f.throughput, SuRate(c, 0.2, 0.05, 1));
}

TEST(ResolveFrameTest, TotalCollision) {
  const SimConfig c = SmallConfig(4, 4);
  const std::vector<ChannelIndex> actions = {2, 2, 2, 2};
  const FrameOutcome f = ResolveFrame(c, actions, Flat(4, 4, 0.1, 0.1));
  EXPECT_EQ(f.NumSuccessful(), 0u);
  EXPECT_EQ(f.throughput, 0.0);
}

TEST(ResolveFrameTest, DimensionMismatchIsConfigError) {
  const SimConfig c = SmallConfig(3, 2);
  const std::vector<ChannelIndex> short_profile = {0};
  EXPECT_THROW(ResolveFrame(c, short_profile, Flat(3, 2, 0.1, 0.1)), ConfigError);
  const std::vector<ChannelIndex> ok = {0, 1};
  EXPECT_THROW(ResolveFrame(c, ok, Flat(2, 2, 0.1, 0.1)), ConfigError);
  const std::vector<ChannelIndex> out_of_range = {0, 3};
  EXPECT_THROW(ResolveFrame(c, out_of_range, Flat(3, 2, 0.1, 0.1)), ConfigError);
}

// Random profiles: structural invariants plus the throughput properties.
TEST(ResolveFrameTest, RandomProfileProperties) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto m = std::uniform_int_distribution<std::uint32_t>(1, 8)(rng);
    const auto k = std::uniform_int_distribution<std::uint32_t>(1, 8)(rng);
    const SimConfig c = SmallConfig(m, k);
    Rng gains(trial);
    const ChannelRealization r = DrawRealization(c, gains);
    std::vector<ChannelIndex> actions(k);
    for (auto& a : actions) a = std::uniform_int_distribution<ChannelIndex>(0, m - 1)(rng);
    const FrameOutcome f = ResolveFrame(c, actions, r);

    EXPECT_EQ(std::accumulate(f.occupancy.begin(), f.occupancy.end(), 0u), k);
    EXPECT_LE(f.NumSuccessful(), std::min(m, k));
    EXPECT_EQ((f.throughput == 0.0), (f.NumSuccessful() == 0));

    // Sending one more SU onto an occupied channel never raises throughput.
    const auto target = actions[0];
    SimConfig bigger = SmallConfig(m, k + 1);
    ChannelRealization r2(m, k + 1);
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = 0; j < k; ++j) {
        r2.su_gain(i, j) = r.su_gain(i, j);
        r2.pu_gain(i, j) = r.pu_gain(i, j);
      }
      r2.su_gain(i, k) = 0.5;
      r2.pu_gain(i, k) = 0.5;
    }
    std::vector<ChannelIndex> more = actions;
    more.push_back(target);
    EXPECT_LE(ResolveFrame(bigger, more, r2).throughput, f.throughput);
  }
}

TEST(DrawRealizationTest, ExponentialMeanAndSupport) {
  SimConfig c = SmallConfig(1000, 1000);
  Rng rng(2024);
  const ChannelRealization r = DrawRealization(c, rng);
  const auto g = r.su_gains();
  const auto z = r.pu_gains();
  ASSERT_EQ(g.size(), 1000000u);
  EXPECT_NEAR(std::accumulate(g.begin(), g.end(), 0.0) / g.size(), 0.1, 0.002);
  EXPECT_NEAR(std::accumulate(z.begin(), z.end(), 0.0) / z.size(), 0.1, 0.002);
  EXPECT_TRUE(std::all_of(g.begin(), g.end(), [](double v) { return v >= 0.0; }));
  EXPECT_TRUE(std::all_of(z.begin(), z.end(), [](double v) { return v >= 0.0; }));
}

TEST(DrawRealizationTest, SameSeedSameMatrices) {
  const SimConfig c = SmallConfig(7, 5);
  Rng a(99), b(99);
  EXPECT_EQ(DrawRealization(c, a), DrawRealization(c, b));
}

}  // namespace
}  // namespace cogq
