#pragma once

#include <string>
#include <utility>
#include <vector>

#include "koch/prefractal.hpp"

namespace koch::tools {

// Minimal SVG canvas in Cartesian coordinates; y points up.
class SvgCanvas {
 public:
  SvgCanvas(double min_x, double min_y, double max_x, double max_y, double pixels = 800.0);

  /// Canvas framing the outline of p with a small margin.
  static SvgCanvas around(const Prefractal& p, double pixels = 800.0);

  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
               double width, const std::string& fill = "none");
  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                double width);
  void dot(double x, double y, double r, const std::string& fill);
  void label(double x, double y, const std::string& text, double size = 12.0);

  std::string str() const;
  void save(const std::string& path) const;

 private:
  std::pair<double, double> map(double x, double y) const;

  double min_x_, min_y_, scale_;
  double width_, height_;
  std::string body_;
};

std::vector<std::pair<double, double>> outline(const Prefractal& p);

}  // namespace koch::tools
