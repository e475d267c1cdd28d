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

#ifndef COGQ_REPORT_H_
#define COGQ_REPORT_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogq/metrics.h"

namespace cogq {

inline constexpr std::string_view kConvergenceHeader =
    "scheme,delta,frame,mean_accessing_sus";
inline constexpr std::string_view kBlockingHeader =
    "scheme,delta,num_sus,su_blocking_prob,pu_blocking_prob";
inline constexpr std::string_view kThroughputHeader =
    "scheme,delta,num_sus,normalized_throughput";

// printf-style %.17g.
std::string FormatNumber(double value);

// CSV bodies. Frames are numbered from 1. The delta column is empty for the
// independent scheme. Empty input throws std::invalid_argument.
std::string ConvergenceCsv(std::span<const ConvergencePoint> records);
std::string BlockingCsv(std::span<const SweepPoint> records);
std::string ThroughputCsv(std::span<const SweepPoint> records);

// Writes `content` to `path`, creating parent directories. Throws IoError.
void WriteTextFile(const std::filesystem::path& path, std::string_view content);

void EmitConvergenceCsv(std::span<const ConvergencePoint> records,
                        const std::filesystem::path& path);
void EmitBlockingCsv(std::span<const SweepPoint> records,
                     const std::filesystem::path& path);
void EmitThroughputCsv(std::span<const SweepPoint> records,
                       const std::filesystem::path& path);

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

Plot ConvergencePlot(std::span<const ConvergencePoint> records);
Plot BlockingPlot(std::span<const SweepPoint> records);
Plot ThroughputPlot(std::span<const SweepPoint> records);

// Self-contained SVG line chart: one polyline per series with two or more
// points, a circle marker per point. Throws std::invalid_argument when the
// plot has no series.
std::string RenderSvg(const Plot& plot);
void EmitSvgPlot(const Plot& plot, const std::filesystem::path& path);

}  // namespace cogq

#endif  // COGQ_REPORT_H_
