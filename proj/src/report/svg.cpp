#include "emodyn/report/svg.hpp"

#include "emodyn/common/format.hpp"

namespace emodyn::report {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
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

std::string coord(double v) {
  std::string s = format_fixed(v, 2);
  if (s == "-0.00") s = "0.00";
  return s;
}

SvgDocument::SvgDocument(double width, double height) : width_(width), height_(height) {}

void SvgDocument::style(std::string_view css) { style_.append(css); }

void SvgDocument::rect(double x, double y, double w, double h, std::string_view cls) {
  body_ += "  <rect x=\"" + coord(x) + "\" y=\"" + coord(y) + "\" width=\"" + coord(w) + "\" height=\"" + coord(h) +
           "\" class=\"" + std::string(cls) + "\"/>\n";
}

void SvgDocument::line(double x1, double y1, double x2, double y2, std::string_view cls) {
  body_ += "  <line x1=\"" + coord(x1) + "\" y1=\"" + coord(y1) + "\" x2=\"" + coord(x2) + "\" y2=\"" + coord(y2) +
           "\" class=\"" + std::string(cls) + "\"/>\n";
}

void SvgDocument::polyline(const std::vector<std::pair<double, double>>& points, std::string_view cls) {
  body_ += "  <polyline class=\"" + std::string(cls) + "\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) body_ += ' ';
    body_ += coord(points[i].first) + "," + coord(points[i].second);
  }
  body_ += "\"/>\n";
}

void SvgDocument::ellipse(double cx, double cy, double rx, double ry, double angle_deg, std::string_view cls) {
  body_ += "  <ellipse cx=\"" + coord(cx) + "\" cy=\"" + coord(cy) + "\" rx=\"" + coord(rx) + "\" ry=\"" + coord(ry) +
           "\" transform=\"rotate(" + coord(angle_deg) + " " + coord(cx) + " " + coord(cy) + ")\" class=\"" +
           std::string(cls) + "\"/>\n";
}

void SvgDocument::text(double x, double y, std::string_view content, std::string_view cls, std::string_view anchor) {
  body_ += "  <text x=\"" + coord(x) + "\" y=\"" + coord(y) + "\" class=\"" + std::string(cls) + "\" text-anchor=\"" +
           std::string(anchor) + "\">" + xml_escape(content) + "</text>\n";
}

std::string SvgDocument::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + coord(width_) + "\" height=\"" + coord(height_) +
         "\" viewBox=\"0 0 " + coord(width_) + " " + coord(height_) + "\">\n";
  if (!style_.empty()) out += "  <style>" + style_ + "</style>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

}  // namespace emodyn::report
