#include "escape/zalgaller.hpp"

#include <cmath>
#include <stdexcept>

#include "escape/objectives.hpp"

namespace escape {

ZalgallerPath build_zalgaller() {
  ZalgallerPath p;
  p.A = {0.0, 0.0};
  p.B = {0.814, 0.0};
  p.C = {0.8460, 0.0005};
  p.D = {1.3017, 0.0151};
  p.E = {0.814, 1.0};
  p.arc_angle = 0.032;

  p.polyline.push_back(p.A);
  p.polyline.push_back(p.B);
  // Radius-1 arc about E from B toward C.
  const double a0 = std::atan2(p.B.y - p.E.y, p.B.x - p.E.x);
  const int steps = static_cast<int>(std::ceil(p.arc_angle / 1e-3));
  for (int i = 1; i <= steps; ++i) {
    const double a = a0 + p.arc_angle * double(i) / double(steps);
    p.polyline.push_back({p.E.x + std::cos(a), p.E.y + std::sin(a)});
  }
  p.polyline.push_back(p.C);
  p.polyline.push_back(p.D);
  p.polyline.push_back(p.E);
  return p;
}

namespace {

std::size_t farthest_interior(const std::vector<Vec2>& poly) {
  std::size_t best = 1;
  double bd = -1.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    const double d = (poly[i] - poly.front()).norm();
    if (d > bd) {
      bd = d;
      best = i;
    }
  }
  return best;
}

double pivot_angle(Vec2 d1, Vec2 d2) {
  if (d2.norm() < 1e-12) return kPi;  // degenerate second chord: no turn
  const double turn = std::atan2(d2.y, d2.x) - std::atan2(d1.y, d1.x);
  double t = std::remainder(turn, 2.0 * kPi);
  return kPi - std::fabs(t);
}

}  // namespace

Strategy2 fit_two_segment(const std::vector<Vec2>& polyline) {
  if (polyline.size() < 2)
    throw std::invalid_argument("fit_two_segment: need at least two vertices");
  if (polyline.size() == 2)
    return {(polyline[1] - polyline[0]).norm(), kPi};
  const std::size_t k = farthest_interior(polyline);
  const Vec2 d1 = polyline[k] - polyline.front();
  const Vec2 d2 = polyline.back() - polyline[k];
  return {d1.norm(), pivot_angle(d1, d2)};
}

Strategy3 fit_three_segment(const std::vector<Vec2>& polyline) {
  if (polyline.size() < 4)
    throw std::invalid_argument("fit_three_segment: need at least four vertices");
  const std::size_t k = farthest_interior(polyline);
  // Second pivot: interior vertex (before k) farthest from the chord A -> poly[k].
  const Vec2 chord = polyline[k] - polyline.front();
  const double cn = chord.norm();
  std::size_t j = 1;
  double bd = -1.0;
  for (std::size_t i = 1; i < k; ++i) {
    const Vec2 d = polyline[i] - polyline.front();
    const double dist = std::fabs(d.x * chord.y - d.y * chord.x) / cn;
    if (dist > bd) {
      bd = dist;
      j = i;
    }
  }
  const Vec2 d1 = polyline[j] - polyline.front();
  const Vec2 d2 = polyline[k] - polyline[j];
  const Vec2 d3 = polyline.back() - polyline[k];
  return {d1.norm(), pivot_angle(d1, d2), d2.norm(), pivot_angle(d2, d3)};
}

bool polyline_is_simple(const std::vector<Vec2>& poly) {
  auto cross = [](Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; };
  auto segments_cross = [&](Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
    const double d1 = cross(p2 - p1, q1 - p1);
    const double d2 = cross(p2 - p1, q2 - p1);
    const double d3 = cross(q2 - q1, p1 - q1);
    const double d4 = cross(q2 - q1, p2 - q1);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
  };
  for (std::size_t i = 0; i + 1 < poly.size(); ++i)
    for (std::size_t j = i + 2; j + 1 < poly.size(); ++j)
      if (segments_cross(poly[i], poly[i + 1], poly[j], poly[j + 1])) return false;
  return true;
}

ZalgallerReport evaluate_zalgaller() {
  const ZalgallerPath path = build_zalgaller();
  ZalgallerReport rep;
  rep.fit = fit_two_segment(path.polyline);
  rep.expected = strip2_expected(rep.fit).value;
  rep.optimum2 = strip2_expected({1.0432668686, 1.3734935859}).value;
  rep.optimum3 = strip3_expected(
                     {1.0255050653, 1.4909825316, 0.5306340577, 2.7495709960})
                     .value;
  rep.dominated = rep.expected > rep.optimum2;
  return rep;
}

}  // namespace escape
