#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "escape/geom.hpp"
#include "escape/montecarlo.hpp"
#include "escape/quadrature.hpp"

namespace escape {

/// Arclength-parametrized plane curve given by its heading phi(s):
/// gamma(0) = 0, gamma'(s) = exp(i phi(s)), phi(0) = 0, |phi| <= phi_max < pi/2.
/// phi is piecewise linear over the knots and held constant past the last one.
struct TurningCurve {
  std::vector<double> knot_s;    // strictly increasing, starting at 0
  std::vector<double> knot_phi;  // knot_phi[0] == 0
  double phi_max = 0.0;

  double phi(double s) const;
};

TurningCurve straight_curve(double length = 8.0);
/// phi(s) = min(k s, cap).
TurningCurve constant_curvature_curve(double k, double cap = 0.4, double length = 8.0);
/// Plain-text knot list: one "s phi" pair per line; '#' starts a comment.
TurningCurve load_curve(std::istream& in);

/// Traced curve: gamma is piecewise closed-form (linear-phase complex
/// exponential per knot interval), so positions are exact to rounding.
class CurveFrame {
 public:
  explicit CurveFrame(TurningCurve curve, double s_budget = 8.0);

  Vec2 gamma(double s) const;
  double lambda(double s) const { return gamma(s).norm(); }
  double arg_gamma(double s) const;
  double phi(double s) const { return curve_.phi(s); }

  /// First arclength with |gamma| = 2, refined to 1e-12.
  double s_star() const { return s_star_; }
  const TurningCurve& curve() const { return curve_; }

 private:
  TurningCurve curve_;
  std::vector<double> seg_s_;    // knot arclengths (with budget end appended)
  std::vector<Vec2> prefix_;     // gamma at seg_s_
  double s_star_;
};

/// Arc-formula average escape length:
/// (2/pi) * integral_0^{s*} s sqrt(1 - (lambda/2)^2) cos(phi - arg gamma) ds.
/// Refuses when the disjoint-arc premise fails.
double a_gamma_arc(const CurveFrame& frame, const QuadratureSpec& spec = {});

/// Area-integral form estimated by Monte Carlo over uniform z in the disk;
/// valid for any curve.
McEstimate a_gamma_mc(const CurveFrame& frame, long n, std::uint64_t seed);

/// Probabilistic check that no two arcs D cap C(gamma(s)) intersect inside
/// the disk, over n_probe seeded pairs s1 < s2.
bool arcs_disjoint(const CurveFrame& frame, long n_probe = 100000,
                   std::uint64_t seed = 1);

struct LowerBoundReport {
  double a_gamma;
  double slack;      // a_gamma - 8/(3 pi)
  bool disjoint;
};

/// Evaluates the arc formula and reports the slack above 8/(3 pi).
LowerBoundReport check_lower_bound(const CurveFrame& frame,
                                   const QuadratureSpec& spec = {});

inline constexpr double kDiskLowerBound = 8.0 / (3.0 * kPi);

}  // namespace escape
