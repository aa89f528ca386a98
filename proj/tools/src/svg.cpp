#include "koch_tools/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>

#include "koch/errors.hpp"

namespace koch::tools {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgCanvas::SvgCanvas(double min_x, double min_y, double max_x, double max_y, double pixels)
    : min_x_(min_x), min_y_(min_y) {
  const double span = std::max(max_x - min_x, max_y - min_y);
  scale_ = pixels / (span > 0 ? span : 1.0);
  width_ = (max_x - min_x) * scale_;
  height_ = (max_y - min_y) * scale_;
}

SvgCanvas SvgCanvas::around(const Prefractal& p, double pixels) {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const auto& [x, y] : outline(p)) {
    lo_x = std::min(lo_x, x);
    lo_y = std::min(lo_y, y);
    hi_x = std::max(hi_x, x);
    hi_y = std::max(hi_y, y);
  }
  const double m = 0.04 * std::max(hi_x - lo_x, hi_y - lo_y);
  return SvgCanvas(lo_x - m, lo_y - m, hi_x + m, hi_y + m, pixels);
}

std::pair<double, double> SvgCanvas::map(double x, double y) const {
  return {(x - min_x_) * scale_, height_ - (y - min_y_) * scale_};
}

void SvgCanvas::polygon(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                        double width, const std::string& fill) {
  body_ += "  <polygon fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) +
           "\" points=\"";
  for (const auto& [x, y] : pts) {
    const auto [u, v] = map(x, y);
    body_ += num(u) + "," + num(v) + " ";
  }
  body_ += "\"/>\n";
}

void SvgCanvas::polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                         double width) {
  body_ += "  <polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) +
           "\" points=\"";
  for (const auto& [x, y] : pts) {
    const auto [u, v] = map(x, y);
    body_ += num(u) + "," + num(v) + " ";
  }
  body_ += "\"/>\n";
}

void SvgCanvas::dot(double x, double y, double r, const std::string& fill) {
  const auto [u, v] = map(x, y);
  body_ += "  <circle cx=\"" + num(u) + "\" cy=\"" + num(v) + "\" r=\"" + num(r) + "\" fill=\"" + fill +
           "\"/>\n";
}

void SvgCanvas::label(double x, double y, const std::string& text, double size) {
  const auto [u, v] = map(x, y);
  body_ += "  <text x=\"" + num(u) + "\" y=\"" + num(v) + "\" font-size=\"" + num(size) +
           "\" font-family=\"sans-serif\">" + escape(text) + "</text>\n";
}

std::string SvgCanvas::str() const {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width_) + "\" height=\"" +
         num(height_) + "\" viewBox=\"0 0 " + num(width_) + " " + num(height_) + "\">\n" +
         "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + body_ + "</svg>\n";
}

void SvgCanvas::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << str();
}

std::vector<std::pair<double, double>> outline(const Prefractal& p) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(to_cartesian(v));
  return pts;
}

}  // namespace koch::tools
