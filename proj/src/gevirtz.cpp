#include "escape/gevirtz.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "escape/rng.hpp"

namespace escape {

double TurningCurve::phi(double s) const {
  if (s <= 0.0) return knot_phi.front();
  if (s >= knot_s.back()) return knot_phi.back();
  const auto it = std::upper_bound(knot_s.begin(), knot_s.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - knot_s.begin()) - 1;
  const double t = (s - knot_s[i]) / (knot_s[i + 1] - knot_s[i]);
  return knot_phi[i] + t * (knot_phi[i + 1] - knot_phi[i]);
}

TurningCurve straight_curve(double length) {
  return {{0.0, length}, {0.0, 0.0}, 0.0};
}

TurningCurve constant_curvature_curve(double k, double cap, double length) {
  if (k <= 0.0) return straight_curve(length);
  TurningCurve c;
  const double s_cap = cap / k;
  if (s_cap < length) {
    c.knot_s = {0.0, s_cap, length};
    c.knot_phi = {0.0, cap, cap};
  } else {
    c.knot_s = {0.0, length};
    c.knot_phi = {0.0, k * length};
  }
  c.phi_max = std::min(cap, k * length);
  return c;
}

TurningCurve load_curve(std::istream& in) {
  TurningCurve c;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double s, phi;
    if (ls >> s >> phi) {
      c.knot_s.push_back(s);
      c.knot_phi.push_back(phi);
      c.phi_max = std::fmax(c.phi_max, std::fabs(phi));
    }
  }
  if (c.knot_s.size() < 2) throw std::runtime_error("curve file: need >= 2 knots");
  if (c.knot_s.front() != 0.0 || c.knot_phi.front() != 0.0)
    throw std::runtime_error("curve file: first knot must be (0, 0)");
  for (std::size_t i = 1; i < c.knot_s.size(); ++i)
    if (c.knot_s[i] <= c.knot_s[i - 1])
      throw std::runtime_error("curve file: arclengths must increase");
  if (c.phi_max >= kPi / 2.0)
    throw std::runtime_error("curve file: |phi| must stay below pi/2");
  return c;
}

namespace {

// Integral of exp(i(a + b t)) over [0, dt].
Vec2 linear_phase_integral(double a, double b, double dt) {
  if (std::fabs(b) < 1e-14) {
    return {dt * std::cos(a + 0.5 * b * dt), dt * std::sin(a + 0.5 * b * dt)};
  }
  const double a1 = a + b * dt;
  return {(std::sin(a1) - std::sin(a)) / b, -(std::cos(a1) - std::cos(a)) / b};
}

}  // namespace

CurveFrame::CurveFrame(TurningCurve curve, double s_budget)
    : curve_(std::move(curve)) {
  seg_s_ = curve_.knot_s;
  if (seg_s_.back() < s_budget) seg_s_.push_back(s_budget);
  prefix_.assign(seg_s_.size(), {0.0, 0.0});
  for (std::size_t i = 1; i < seg_s_.size(); ++i) {
    const double s0 = seg_s_[i - 1], s1 = seg_s_[i];
    const double p0 = curve_.phi(s0), p1 = curve_.phi(s1);
    const double b = (p1 - p0) / (s1 - s0);
    prefix_[i] = prefix_[i - 1] + linear_phase_integral(p0, b, s1 - s0);
  }

  // Locate |gamma| = 2 by scan + bisection. lambda is increasing for valid
  // curves, so the first bracketing interval contains the root.
  const double budget = seg_s_.back();
  double lo = 0.0, hi = -1.0;
  const double step = 1e-2;
  for (double s = 2.0 - step; s <= budget; s += step) {
    if (gamma(s).norm() >= 2.0) {
      hi = s;
      lo = s - step;
      break;
    }
  }
  if (hi < 0.0)
    throw std::runtime_error("trace_curve: |gamma| never reaches 2 within the budget");
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gamma(mid).norm() >= 2.0 ? hi : lo) = mid;
  }
  s_star_ = 0.5 * (lo + hi);
}

Vec2 CurveFrame::gamma(double s) const {
  if (s <= 0.0) return {0.0, 0.0};
  const auto it = std::upper_bound(seg_s_.begin(), seg_s_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - seg_s_.begin());
  if (i >= seg_s_.size()) {
    // Past the budget: heading is frozen, extend the final straight piece.
    const Vec2 tail = unit_vector(curve_.phi(seg_s_.back()));
    return prefix_.back() + tail * (s - seg_s_.back());
  }
  const double s0 = seg_s_[i - 1];
  const double p0 = curve_.phi(s0);
  const double p1 = curve_.phi(seg_s_[i]);
  const double b = (p1 - p0) / (seg_s_[i] - s0);
  return prefix_[i - 1] + linear_phase_integral(p0, b, s - s0);
}

double CurveFrame::arg_gamma(double s) const {
  const Vec2 g = gamma(s);
  return std::atan2(g.y, g.x);
}

double a_gamma_arc(const CurveFrame& frame, const QuadratureSpec& spec) {
  if (!arcs_disjoint(frame))
    throw std::domain_error("a_gamma_arc: arc family is not disjoint; formula invalid");
  auto integrand = [&](double s) {
    if (s <= 0.0) return 0.0;
    const double lam = frame.lambda(s);
    const double root = std::sqrt(std::fmax(0.0, 1.0 - 0.25 * lam * lam));
    return s * root * std::cos(frame.phi(s) - frame.arg_gamma(s));
  };
  QuadratureSpec sp = spec;
  for (double k : frame.curve().knot_s)
    if (k > 0.0 && k < frame.s_star()) sp.split_points.push_back(k);
  return 2.0 / kPi * integrate_checked(integrand, 0.0, frame.s_star(), sp);
}

namespace {

// First s with |gamma(s) - z| = 1, by coarse march + bisection.
double sigma_escape(const CurveFrame& frame, Vec2 z, double budget) {
  auto d = [&](double s) { return (frame.gamma(s) - z).norm() - 1.0; };
  if (d(0.0) >= 0.0) return 0.0;  // z on (or numerically at) the boundary
  const double step = 0.02;
  double lo = 0.0;
  for (double s = step; s <= budget + step; s += step) {
    if (d(s) >= 0.0) {
      double hi = s;
      for (int it = 0; it < 100 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        (d(mid) >= 0.0 ? hi : lo) = mid;
      }
      return 0.5 * (lo + hi);
    }
    lo = s;
  }
  throw std::runtime_error("a_gamma_mc: curve never leaves the unit disk around z");
}

}  // namespace

McEstimate a_gamma_mc(const CurveFrame& frame, long n, std::uint64_t seed) {
  const double budget = frame.s_star() + 2.0;
  // Welford in sample order: single pass, deterministic.
  double mean = 0.0, ss = 0.0;
  long count = 0;
  for (long i = 0; i < n; ++i) {
    // Uniform point in the unit disk via inverse-CDF radius.
    const double rad = std::sqrt(uniform01(seed, 2 * std::uint64_t(i)));
    const double ang = -kPi + 2.0 * kPi * uniform01(seed, 2 * std::uint64_t(i) + 1);
    const double sig = sigma_escape(frame, {rad * std::cos(ang), rad * std::sin(ang)},
                                    budget);
    ++count;
    const double delta = sig - mean;
    mean += delta / double(count);
    ss += delta * (sig - mean);
  }
  McEstimate est;
  est.point = mean;
  est.std_error = std::sqrt(ss / double(count - 1) / double(count));
  est.n = n;
  est.seed = seed;
  return est;
}

bool arcs_disjoint(const CurveFrame& frame, long n_probe, std::uint64_t seed) {
  const double s_star = frame.s_star();
  for (long i = 0; i < n_probe; ++i) {
    double s1 = s_star * uniform01(seed, 2 * std::uint64_t(i));
    double s2 = s_star * uniform01(seed, 2 * std::uint64_t(i) + 1);
    if (s1 > s2) std::swap(s1, s2);
    const Vec2 g1 = frame.gamma(s1), g2 = frame.gamma(s2);
    const Vec2 diff = g2 - g1;
    const double d = diff.norm();
    if (d >= 2.0 || d < 1e-12) continue;
    // Intersection points of the two unit circles.
    const Vec2 mid = (g1 + g2) * 0.5;
    const double h = std::sqrt(std::fmax(0.0, 1.0 - 0.25 * d * d));
    const Vec2 perp{-diff.y / d * h, diff.x / d * h};
    if ((mid + perp).norm() < 1.0 - 1e-9 || (mid - perp).norm() < 1.0 - 1e-9)
      return false;
  }
  return true;
}

LowerBoundReport check_lower_bound(const CurveFrame& frame, const QuadratureSpec& spec) {
  LowerBoundReport rep;
  rep.disjoint = arcs_disjoint(frame);
  if (!rep.disjoint)
    throw std::domain_error("check_lower_bound: arc family is not disjoint");
  rep.a_gamma = a_gamma_arc(frame, spec);
  rep.slack = rep.a_gamma - kDiskLowerBound;
  return rep;
}

}  // namespace escape
