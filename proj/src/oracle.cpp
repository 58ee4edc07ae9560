#include "escape/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "escape/disk.hpp"
#include "escape/strip.hpp"

namespace escape {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Distance along (p, dir) to the strip boundary, or nullopt for a tangent ray.
std::optional<std::pair<double, ExitSide>> strip_hit(Vec2 p, Vec2 dir) {
  // Wide enough to catch cos(pi/2) ~ 6e-17: a numerically vertical ray is
  // reported as non-escaping rather than escaping at distance ~1e16.
  constexpr double tangent_eps = 1e-14;
  if (dir.x > tangent_eps) return std::make_pair((1.0 - p.x) / dir.x, ExitSide::Right);
  if (dir.x < -tangent_eps) return std::make_pair(-p.x / dir.x, ExitSide::Left);
  return std::nullopt;
}

// Positive root of |p + t dir| = 1 for p inside the unit disk.
std::pair<double, ExitSide> disk_hit(Vec2 p, Vec2 dir) {
  const double b = p.dot(dir);
  const double c = p.dot(p) - 1.0;
  const double disc = b * b - c;
  const double t = -b + std::sqrt(std::fmax(0.0, disc));
  return {t, ExitSide::Circle};
}

}  // namespace

EscapeRealization raycast(RegionTag region, Vec2 start,
                          const std::vector<double>& headings,
                          const std::vector<double>& caps) {
  if (headings.empty() || headings.size() != caps.size())
    throw std::invalid_argument("raycast: headings/caps size mismatch");

  EscapeRealization out;
  out.vertices.push_back(start);
  Vec2 p = start;
  for (std::size_t i = 0; i < headings.size(); ++i) {
    const Vec2 dir = unit_vector(headings[i]);
    const double cap = caps[i];

    double t_hit = kInf;
    ExitSide side = ExitSide::Right;
    if (region == RegionTag::Strip) {
      if (auto h = strip_hit(p, dir)) {
        t_hit = h->first;
        side = h->second;
      }
    } else {
      auto h = disk_hit(p, dir);
      t_hit = h.first;
      side = h.second;
    }

    if (std::isfinite(t_hit) && t_hit <= cap) {
      p = p + dir * t_hit;
      out.total_length += t_hit;
      out.vertices.push_back(p);
      out.escaped = true;
      out.exit_side = side;
      return out;
    }
    if (std::isinf(cap)) break;  // unbounded final segment missed the boundary
    p = p + dir * cap;
    out.total_length += cap;
    out.vertices.push_back(p);
  }
  out.escaped = false;
  return out;
}

std::pair<std::vector<double>, std::vector<double>> strategy_to_headings(
    double theta, const Strategy2& strat) {
  return {{theta, theta + strat.alpha - kPi}, {strat.r, kInf}};
}

std::pair<std::vector<double>, std::vector<double>> strategy_to_headings(
    double theta, const Strategy3& strat) {
  return {{theta, theta + strat.alpha - kPi, theta + strat.alpha + strat.beta - 2.0 * kPi},
          {strat.r, strat.s, kInf}};
}

std::pair<std::vector<double>, std::vector<double>> strategy_to_headings(
    double theta, const DiskStrategy& strat) {
  return {{theta, theta + strat.alpha - kPi}, {strat.r, kInf}};
}

}  // namespace escape
