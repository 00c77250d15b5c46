#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace emodyn::report {

/// Minimal deterministic SVG writer. Coordinates are printed with two
/// decimals; nothing time- or host-dependent is embedded.
class SvgDocument {
 public:
  SvgDocument(double width, double height);

  void style(std::string_view css);
  void rect(double x, double y, double w, double h, std::string_view cls);
  void line(double x1, double y1, double x2, double y2, std::string_view cls);
  void polyline(const std::vector<std::pair<double, double>>& points, std::string_view cls);
  /// Ellipse rotated by `angle_deg` (clockwise in screen space) about its centre.
  void ellipse(double cx, double cy, double rx, double ry, double angle_deg, std::string_view cls);
  void text(double x, double y, std::string_view content, std::string_view cls, std::string_view anchor = "start");

  std::string str() const;

 private:
  double width_;
  double height_;
  std::string style_;
  std::string body_;
};

std::string xml_escape(std::string_view s);

/// Fixed two-decimal coordinate; "-0.00" is printed as "0.00".
std::string coord(double v);

}  // namespace emodyn::report
