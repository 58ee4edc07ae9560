#pragma once

#include <string>
#include <vector>

#include "escape/geom.hpp"

namespace escape {

/// Minimal deterministic SVG writer (fixed %.6f formatting, no timestamps).
class SvgCanvas {
 public:
  /// World-coordinate viewport [x0, x1] x [y0, y1], mapped to `px` wide.
  SvgCanvas(double x0, double y0, double x1, double y1, int px = 640);

  void line(Vec2 a, Vec2 b, const std::string& stroke, double width = 1.0);
  void polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                double width = 1.5);
  void circle(Vec2 center, double radius, const std::string& stroke);
  void dot(Vec2 center, double radius_px, const std::string& fill);
  void text(Vec2 pos, const std::string& label, const std::string& fill = "#333");

  std::string finish() const;
  void write_file(const std::string& path) const;

 private:
  Vec2 to_px(Vec2 w) const;
  double scale_;
  double x0_, y0_, y1_;
  int width_px_, height_px_;
  std::string body_;
};

}  // namespace escape
