#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace escape {

inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double c) const { return {x * c, y * c}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
};

inline Vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

inline double deg_to_rad(double d) { return d * kPi / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / kPi; }

/// acos with the argument clamped into [-1, 1]; drift beyond `tol` is an error.
inline double safe_acos(double v, double tol = 1e-12) {
  if (v > 1.0 + tol || v < -1.0 - tol)
    throw std::domain_error("acos argument outside [-1, 1]");
  return std::acos(std::fmin(1.0, std::fmax(-1.0, v)));
}

inline double safe_asin(double v, double tol = 1e-12) {
  if (v > 1.0 + tol || v < -1.0 - tol)
    throw std::domain_error("asin argument outside [-1, 1]");
  return std::asin(std::fmin(1.0, std::fmax(-1.0, v)));
}

inline double safe_sqrt(double v, double tol = 1e-12) {
  if (v < -tol) throw std::domain_error("sqrt of negative value");
  return std::sqrt(std::fmax(0.0, v));
}

}  // namespace escape
