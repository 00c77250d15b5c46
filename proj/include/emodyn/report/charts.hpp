#pragma once

#include <span>
#include <string>
#include <vector>

#include "emodyn/dynamics/home_base.hpp"

namespace emodyn::report {

/// One line of a time-series chart. `rolled` is optional; when present it is
/// drawn dark over the light raw line.
struct Series {
  std::string name;
  std::vector<double> raw;
  std::vector<double> rolled;
};

struct TimeseriesChart {
  std::string title;
  std::vector<std::string> x_labels;  // one per point, e.g. month keys
  std::vector<Series> series;
};

/// Throws ParameterError on an empty chart or mismatched series lengths.
std::string render_timeseries(const TimeseriesChart& chart);

struct EllipseSeries {
  std::string name;  // legend label
  dynamics::HomeBase2D home_base;
};

/// Draws each home base as an ellipse with class `era-<i>` (red, then blue)
/// in a square warmth/competence frame sized to contain all of them.
std::string render_ellipses(std::span<const EllipseSeries> ellipses, const std::string& title);

}  // namespace emodyn::report
