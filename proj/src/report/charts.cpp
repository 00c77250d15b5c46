#include "emodyn/report/charts.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "emodyn/common/error.hpp"
#include "emodyn/report/svg.hpp"

namespace emodyn::report {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 420;
constexpr double kLeft = 60;
constexpr double kRight = 160;
constexpr double kTop = 40;
constexpr double kBottom = 50;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr std::size_t kPaletteSize = std::size(kPalette);

std::string series_css(std::size_t count) {
  std::string css =
      "text{font-family:sans-serif;font-size:11px;fill:#222}.title{font-size:14px}"
      ".axis{stroke:#444;stroke-width:1}polyline{fill:none}";
  for (std::size_t i = 0; i < std::min(count, kPaletteSize); ++i) {
    const std::string c = kPalette[i];
    const std::string n = std::to_string(i);
    css += ".s" + n + ".raw{stroke:" + c + ";stroke-opacity:0.35;stroke-width:1}";
    css += ".s" + n + ".rolled{stroke:" + c + ";stroke-width:2.2}";
    css += ".s" + n + ".key{fill:" + c + "}";
  }
  return css;
}

}  // namespace

std::string render_timeseries(const TimeseriesChart& chart) {
  const std::size_t n = chart.x_labels.size();
  if (n == 0 || chart.series.empty()) throw ParameterError("time-series chart needs at least one point and series");
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& s : chart.series) {
    if (s.raw.size() != n || (!s.rolled.empty() && s.rolled.size() != n)) {
      throw ParameterError("series '" + s.name + "' length differs from the x axis");
    }
    for (double v : s.raw) lo = std::min(lo, v), hi = std::max(hi, v);
    for (double v : s.rolled) lo = std::min(lo, v), hi = std::max(hi, v);
  }
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](std::size_t i) { return kLeft + (n == 1 ? pw / 2 : pw * static_cast<double>(i) / static_cast<double>(n - 1)); };
  auto py = [&](double v) { return kTop + ph * (hi - v) / (hi - lo); };

  SvgDocument svg(kWidth, kHeight);
  svg.style(series_css(chart.series.size()));
  svg.text(kWidth / 2, 22, chart.title, "title", "middle");
  svg.line(kLeft, kTop + ph, kLeft + pw, kTop + ph, "axis");
  svg.line(kLeft, kTop, kLeft, kTop + ph, "axis");
  const std::size_t step = std::max<std::size_t>(1, (n + 7) / 8);
  for (std::size_t i = 0; i < n; i += step) svg.text(px(i), kTop + ph + 18, chart.x_labels[i], "tick", "middle");

  for (std::size_t k = 0; k < chart.series.size(); ++k) {
    const auto& s = chart.series[k];
    const std::string cls = "s" + std::to_string(k % kPaletteSize);
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(px(i), py(s.raw[i]));
    svg.polyline(pts, cls + " raw");
    if (!s.rolled.empty()) {
      pts.clear();
      for (std::size_t i = 0; i < n; ++i) pts.emplace_back(px(i), py(s.rolled[i]));
      svg.polyline(pts, cls + " rolled");
    }
    const double ly = kTop + 14.0 * static_cast<double>(k);
    svg.rect(kLeft + pw + 14, ly - 8, 10, 10, cls + " key");
    svg.text(kLeft + pw + 30, ly, s.name, "legend");
  }
  return svg.str();
}

std::string render_ellipses(std::span<const EllipseSeries> ellipses, const std::string& title) {
  if (ellipses.empty()) throw ParameterError("ellipse chart needs at least one home base");
  // Square data frame so rotation survives the mapping to screen space.
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
  for (const auto& e : ellipses) {
    const auto& hb = e.home_base;
    const double a = hb.semi_major();
    x_lo = std::min(x_lo, hb.mean_w - a);
    x_hi = std::max(x_hi, hb.mean_w + a);
    y_lo = std::min(y_lo, hb.mean_c - a);
    y_hi = std::max(y_hi, hb.mean_c + a);
  }
  double span = std::max(x_hi - x_lo, y_hi - y_lo) * 1.1;
  if (!(span > 0)) span = 1.0;
  const double cx0 = (x_lo + x_hi) / 2;
  const double cy0 = (y_lo + y_hi) / 2;

  constexpr double kSize = 480;
  constexpr double kPad = 50;
  const double scale = (kSize - 2 * kPad) / span;
  auto px = [&](double w) { return kSize / 2 + (w - cx0) * scale; };
  auto py = [&](double c) { return kSize / 2 - (c - cy0) * scale; };

  SvgDocument svg(kSize + 120, kSize);
  svg.style(
      "text{font-family:sans-serif;font-size:11px;fill:#222}.title{font-size:14px}.axis{stroke:#444;stroke-width:1}"
      "ellipse{fill-opacity:0.15;stroke-width:2}.era-0{fill:#d62728;stroke:#d62728}"
      ".era-1{fill:#1f77b4;stroke:#1f77b4}.key.era-0{fill-opacity:1}.key.era-1{fill-opacity:1}");
  svg.text((kSize + 120) / 2, 22, title, "title", "middle");
  svg.line(kPad, kSize - kPad, kSize - kPad, kSize - kPad, "axis");
  svg.line(kPad, kPad, kPad, kSize - kPad, "axis");
  svg.text(kSize / 2, kSize - 16, "warmth", "label", "middle");
  svg.text(16, kSize / 2, "competence", "label", "middle");
  for (std::size_t i = 0; i < ellipses.size(); ++i) {
    const auto& hb = ellipses[i].home_base;
    const std::string cls = "era-" + std::to_string(i);
    // Screen y points down, so the data-space angle flips sign.
    const double angle_deg = -hb.angle * 180.0 / std::numbers::pi;
    svg.ellipse(px(hb.mean_w), py(hb.mean_c), hb.semi_major() * scale, hb.semi_minor() * scale, angle_deg, cls);
    svg.rect(kSize + 10, kPad + 16.0 * static_cast<double>(i) - 9, 10, 10, cls + " key");
    svg.text(kSize + 26, kPad + 16.0 * static_cast<double>(i), ellipses[i].name, "legend");
  }
  return svg.str();
}

}  // namespace emodyn::report
