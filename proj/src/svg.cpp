#include "escape/svg.hpp"

#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace escape {

namespace {
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}
}  // namespace

SvgCanvas::SvgCanvas(double x0, double y0, double x1, double y1, int px) {
  x0_ = x0;
  y0_ = y0;
  y1_ = y1;
  scale_ = px / (x1 - x0);
  width_px_ = px;
  height_px_ = static_cast<int>((y1 - y0) * scale_);
}

Vec2 SvgCanvas::to_px(Vec2 w) const {
  return {(w.x - x0_) * scale_, (y1_ - w.y) * scale_};
}

void SvgCanvas::line(Vec2 a, Vec2 b, const std::string& stroke, double width) {
  const Vec2 pa = to_px(a), pb = to_px(b);
  body_ += fmt("<line x1=\"%.6f\" y1=\"%.6f\" x2=\"%.6f\" y2=\"%.6f\" "
               "stroke=\"%s\" stroke-width=\"%.2f\"/>\n",
               pa.x, pa.y, pb.x, pb.y, stroke.c_str(), width);
}

void SvgCanvas::polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                         double width) {
  body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
           fmt("%.2f", width) + "\" points=\"";
  for (const Vec2& p : pts) {
    const Vec2 q = to_px(p);
    body_ += fmt("%.6f,%.6f ", q.x, q.y);
  }
  body_ += "\"/>\n";
}

void SvgCanvas::circle(Vec2 center, double radius, const std::string& stroke) {
  const Vec2 c = to_px(center);
  body_ += fmt("<circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" fill=\"none\" "
               "stroke=\"%s\" stroke-width=\"1.5\"/>\n",
               c.x, c.y, radius * scale_, stroke.c_str());
}

void SvgCanvas::dot(Vec2 center, double radius_px, const std::string& fill) {
  const Vec2 c = to_px(center);
  body_ += fmt("<circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.2f\" fill=\"%s\"/>\n", c.x, c.y,
               radius_px, fill.c_str());
}

void SvgCanvas::text(Vec2 pos, const std::string& label, const std::string& fill) {
  const Vec2 p = to_px(pos);
  body_ += fmt("<text x=\"%.6f\" y=\"%.6f\" font-size=\"13\" fill=\"%s\">", p.x, p.y,
               fill.c_str()) +
           label + "</text>\n";
}

std::string SvgCanvas::finish() const {
  return fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
             "viewBox=\"0 0 %d %d\">\n",
             width_px_, height_px_, width_px_, height_px_) +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + body_ + "</svg>\n";
}

void SvgCanvas::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << finish();
}

}  // namespace escape
