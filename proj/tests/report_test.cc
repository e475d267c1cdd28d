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

#include "cogq/report.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace cogq {
namespace {

namespace fs = std::filesystem;

std::size_t Count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SweepPoint Point(SchemeVariant v, std::uint32_t k, double su, double pu, double nt) {
  SweepPoint p{v, k, {}};
  p.metrics.su_blocking_prob = su;
  p.metrics.pu_blocking_prob = pu;
  p.metrics.normalized_throughput = nt;
  return p;
}

TEST(FormatNumberTest, SeventeenSignificantDigits) {
  EXPECT_EQ(FormatNumber(0.1), "0.10000000000000001");
  EXPECT_EQ(FormatNumber(50.0), "50");
  EXPECT_EQ(FormatNumber(1.0 / 3.0), "0.33333333333333331");
}

TEST(CsvTest, ConvergenceSchema) {
  const std::vector<ConvergencePoint> records = {
      {{Scheme::kCollaborative, 2}, {1.5, 2.0}},
      {{Scheme::kIndependent, 0}, {1.0, 1.25}}};
  EXPECT_EQ(ConvergenceCsv(records),
            "scheme,delta,frame,mean_accessing_sus\n"
            "collaborative,2,1,1.5\n"
            "collaborative,2,2,2\n"
            "independent,,1,1\n"
            "independent,,2,1.25\n");
}

TEST(CsvTest, SweepSchemas) {
  const std::vector<SweepPoint> records = {
      Point({Scheme::kIndependent, 0}, 60, 0.25, 0.5, 0.75),
      Point({Scheme::kCollaborative, 5}, 60, 0.125, 0.0, 1.0)};
  EXPECT_EQ(BlockingCsv(records),
            "scheme,delta,num_sus,su_blocking_prob,pu_blocking_prob\n"
            "independent,,60,0.25,0.5\n"
            "collaborative,5,60,0.125,0\n");
  EXPECT_EQ(ThroughputCsv(records),
            "scheme,delta,num_sus,normalized_throughput\n"
            "independent,,60,0.75\n"
            "collaborative,5,60,1\n");
}

TEST(CsvTest, EmptyInputWritesNothing) {
  const fs::path path = fs::temp_directory_path() / "cogq_empty.csv";
  fs::remove(path);
  EXPECT_THROW(EmitConvergenceCsv({}, path), std::invalid_argument);
  EXPECT_THROW(EmitBlockingCsv({}, path), std::invalid_argument);
  EXPECT_FALSE(fs::exists(path));
}

TEST(CsvTest, WritesAndRewritesIdentically) {
  const fs::path dir = fs::temp_directory_path() / "cogq_report_test" / "nested";
  fs::remove_all(dir.parent_path());
  const std::vector<ConvergencePoint> records = {{{Scheme::kIndependent, 0}, {0.1, 0.2}}};
  EmitConvergenceCsv(records, dir / "a.csv");
  EmitConvergenceCsv(records, dir / "b.csv");
  EXPECT_EQ(Slurp(dir / "a.csv"), Slurp(dir / "b.csv"));
  EXPECT_EQ(Slurp(dir / "a.csv"), ConvergenceCsv(records));
}

TEST(CsvTest, UnwritablePathIsIoError) {
  const fs::path blocker = fs::temp_directory_path() / "cogq_blocker";
  std::ofstream(blocker) << "x";
  const std::vector<ConvergencePoint> records = {{{Scheme::kIndependent, 0}, {1.0}}};
  EXPECT_THROW(EmitConvergenceCsv(records, blocker / "sub" / "x.csv"), IoError);
}

TEST(SvgTest, OnePolylinePerSeries) {
  const std::vector<ConvergencePoint> records = {
      {{Scheme::kIndependent, 0}, {1, 2, 3}},
      {{Scheme::kCollaborative, 0}, {1, 3, 4}},
      {{Scheme::kCollaborative, 2}, {1, 2, 4}},
      {{Scheme::kCollaborative, 4}, {1, 2, 2}}};
  const std::string svg = RenderSvg(ConvergencePlot(records));
  EXPECT_EQ(Count(svg, "<polyline"), 4u);
  EXPECT_EQ(Count(svg, "<circle"), 12u);
  EXPECT_NE(svg.find("collaborative (delta=4)"), std::string::npos);
  EXPECT_EQ(svg, RenderSvg(ConvergencePlot(records)));
}

TEST(SvgTest, SinglePointSeriesGetsMarkerOnly) {
  Plot plot{"t", "x", "y", {{"lonely", {{1.0, 2.0}}}}};
  const std::string svg = RenderSvg(plot);
  EXPECT_EQ(Count(svg, "<polyline"), 0u);
  EXPECT_EQ(Count(svg, "<circle"), 1u);
  EXPECT_THROW(RenderSvg(Plot{}), std::invalid_argument);
}

TEST(SvgTest, SweepPlotsGroupByVariant) {
  const std::vector<SweepPoint> records = {
      Point({Scheme::kIndependent, 0}, 40, 0, 0, 1),
      Point({Scheme::kIndependent, 0}, 60, 0.3, 0.2, 0.8),
      Point({Scheme::kCollaborative, 2}, 40, 0, 0, 1),
      Point({Scheme::kCollaborative, 2}, 60, 0.2, 0.1, 0.9)};
  const Plot blocking = BlockingPlot(records);
  ASSERT_EQ(blocking.series.size(), 4u);  // SU and PU per variant
  EXPECT_EQ(blocking.series[0].label, "independent SU");
  EXPECT_EQ(blocking.series[3].label, "collaborative (delta=2) PU");
  const Plot nt = ThroughputPlot(records);
  ASSERT_EQ(nt.series.size(), 2u);
  EXPECT_EQ(nt.series[1].points, (std::vector<std::pair<double, double>>{{40, 1}, {60, 0.9}}));
  EXPECT_EQ(Count(RenderSvg(nt), "<polyline"), 2u);
}

}  // namespace
}  // namespace cogq
