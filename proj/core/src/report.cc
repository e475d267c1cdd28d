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

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace cogq {

namespace fs = std::filesystem;

std::string FormatNumber(double value) { return fmt::format("{:.17g}", value); }

namespace {

std::string DeltaField(const SchemeVariant& v) {
  if (v.scheme == Scheme::kIndependent) return "";
  return std::to_string(v.delta);
}

template <typename T>
void RequireRecords(std::span<const T> records) {
  if (records.empty()) throw std::invalid_argument("no records to write");
}

}  // namespace

std::string ConvergenceCsv(std::span<const ConvergencePoint> records) {
  RequireRecords(records);
  std::string out = fmt::format("{}\n", kConvergenceHeader);
  for (const ConvergencePoint& r : records) {
    for (std::size_t t = 0; t < r.mean_accessing_sus.size(); ++t) {
      out += fmt::format("{},{},{},{}\n", SchemeName(r.variant.scheme),
                         DeltaField(r.variant), t + 1,
                         FormatNumber(r.mean_accessing_sus[t]));
    }
  }
  return out;
}

std::string BlockingCsv(std::span<const SweepPoint> records) {
  RequireRecords(records);
  std::string out = fmt::format("{}\n", kBlockingHeader);
  for (const SweepPoint& r : records) {
    out += fmt::format("{},{},{},{},{}\n", SchemeName(r.variant.scheme),
                       DeltaField(r.variant), r.num_sus,
                       FormatNumber(r.metrics.su_blocking_prob),
                       FormatNumber(r.metrics.pu_blocking_prob));
  }
  return out;
}

std::string ThroughputCsv(std::span<const SweepPoint> records) {
  RequireRecords(records);
  std::string out = fmt::format("{}\n", kThroughputHeader);
  for (const SweepPoint& r : records) {
    out += fmt::format("{},{},{},{}\n", SchemeName(r.variant.scheme),
                       DeltaField(r.variant), r.num_sus,
                       FormatNumber(r.metrics.normalized_throughput));
  }
  return out;
}

void WriteTextFile(const fs::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  if (ec) {
    throw IoError(fmt::format("cannot create {}: {}",
                              path.parent_path().string(), ec.message()));
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open {} for writing", path.string()));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError(fmt::format("failed writing {}", path.string()));
}

void EmitConvergenceCsv(std::span<const ConvergencePoint> records,
                        const fs::path& path) {
  WriteTextFile(path, ConvergenceCsv(records));
}

void EmitBlockingCsv(std::span<const SweepPoint> records, const fs::path& path) {
  WriteTextFile(path, BlockingCsv(records));
}

void EmitThroughputCsv(std::span<const SweepPoint> records, const fs::path& path) {
  WriteTextFile(path, ThroughputCsv(records));
}

Plot ConvergencePlot(std::span<const ConvergencePoint> records) {
  Plot plot{"Accessing SUs per iteration", "iteration", "mean accessing SUs", {}};
  for (const ConvergencePoint& r : records) {
    PlotSeries s{r.variant.Label(), {}};
    for (std::size_t t = 0; t < r.mean_accessing_sus.size(); ++t) {
      s.points.emplace_back(static_cast<double>(t + 1), r.mean_accessing_sus[t]);
    }
    plot.series.push_back(std::move(s));
  }
  return plot;
}

namespace {

// Groups sweep points by variant, preserving first-seen order.
template <typename Value>
std::vector<PlotSeries> SeriesByVariant(std::span<const SweepPoint> records,
                                        const std::string& suffix, Value value) {
  std::vector<SchemeVariant> order;
  std::vector<PlotSeries> series;
  for (const SweepPoint& r : records) {
    auto it = std::find(order.begin(), order.end(), r.variant);
    std::size_t idx = static_cast<std::size_t>(it - order.begin());
    if (it == order.end()) {
      order.push_back(r.variant);
      series.push_back({r.variant.Label() + suffix, {}});
    }
    series[idx].points.emplace_back(r.num_sus, value(r.metrics));
  }
  return series;
}

}  // namespace

Plot BlockingPlot(std::span<const SweepPoint> records) {
  Plot plot{"Blocking probability versus number of SUs", "number of SUs",
            "blocking probability", {}};
  auto su = SeriesByVariant(records, " SU",
                            [](const MetricsRecord& m) { return m.su_blocking_prob; });
  auto pu = SeriesByVariant(records, " PU",
                            [](const MetricsRecord& m) { return m.pu_blocking_prob; });
  plot.series = std::move(su);
  plot.series.insert(plot.series.end(), pu.begin(), pu.end());
  return plot;
}

Plot ThroughputPlot(std::span<const SweepPoint> records) {
  Plot plot{"Normalized throughput versus number of SUs", "number of SUs",
            "normalized throughput", {}};
  plot.series = SeriesByVariant(
      records, "", [](const MetricsRecord& m) { return m.normalized_throughput; });
  return plot;
}

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 440;
constexpr double kLeft = 70;
constexpr double kRight = 220;  // legend column
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void Add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void Widen() {
    if (!(hi > lo)) {
      const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
      lo -= pad;
      hi += pad;
    }
  }
};

}  // namespace

std::string RenderSvg(const Plot& plot) {
  if (plot.series.empty()) throw std::invalid_argument("plot has no series");
  Range xr, yr;
  for (const PlotSeries& s : plot.series) {
    for (const auto& [x, y] : s.points) {
      xr.Add(x);
      yr.Add(y);
    }
  }
  if (!std::isfinite(xr.lo)) xr = {0.0, 1.0};
  if (!std::isfinite(yr.lo)) yr = {0.0, 1.0};
  yr.lo = std::min(yr.lo, 0.0);
  xr.Widen();
  yr.Widen();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto sy = [&](double y) { return kTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kWidth, kHeight);
  svg += fmt::format("<text x=\"{:.2f}\" y=\"22\" text-anchor=\"middle\" "
                     "font-size=\"15\">{}</text>\n",
                     kLeft + plot_w / 2, Escape(plot.title));
  svg += fmt::format(
      "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
      "fill=\"none\" stroke=\"black\"/>\n",
      kLeft, kTop, plot_w, plot_h);

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" "
        "stroke=\"black\"/><text x=\"{0:.2f}\" y=\"{3:.2f}\" "
        "text-anchor=\"middle\">{4:.4g}</text>\n",
        sx(fx), kTop + plot_h, kTop + plot_h + 5, kTop + plot_h + 18, fx);
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" "
        "stroke=\"black\"/><text x=\"{3:.2f}\" y=\"{4:.2f}\" "
        "text-anchor=\"end\">{5:.4g}</text>\n",
        kLeft - 5, sy(fy), kLeft, kLeft - 8, sy(fy) + 4, fy);
  }
  svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
                     kLeft + plot_w / 2, kHeight - 18, Escape(plot.x_label));
  svg += fmt::format(
      "<text x=\"18\" y=\"{0:.2f}\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 18 {0:.2f})\">{1}</text>\n",
      kTop + plot_h / 2, Escape(plot.y_label));

  for (std::size_t i = 0; i < plot.series.size(); ++i) {
    const PlotSeries& s = plot.series[i];
    const char* color = kPalette[i % kPalette.size()];
    if (s.points.size() >= 2) {
      std::string pts;
      for (const auto& [x, y] : s.points) {
        if (!pts.empty()) pts += ' ';
        pts += fmt::format("{:.2f},{:.2f}", sx(x), sy(y));
      }
      svg += fmt::format(
          "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" "
          "points=\"{}\"/>\n",
          color, pts);
    }
    for (const auto& [x, y] : s.points) {
      svg += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\" fill=\"{}\"/>\n",
                         sx(x), sy(y), color);
    }
    const double ly = kTop + 12 + 18 * static_cast<double>(i);
    const double lx = kWidth - kRight + 15;
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" "
        "stroke=\"{3}\" stroke-width=\"2\"/><text x=\"{4:.2f}\" y=\"{5:.2f}\">{6}</text>\n",
        lx, ly, lx + 20, color, lx + 26, ly + 4, Escape(s.label));
  }
  svg += "</svg>\n";
  return svg;
}

void EmitSvgPlot(const Plot& plot, const fs::path& path) {
  WriteTextFile(path, RenderSvg(plot));
}

}  // namespace cogq
