#include "escape/strip.hpp"

#include <cassert>
#include <cmath>

#include "escape/oracle.hpp"

namespace escape {

bool Strategy2::closed_form_domain() const {
  if (!(r > 1.0)) return false;
  const double w = kPi / 2.0 - alpha;
  return w > 0.0 && w < std::acos(1.0 / r);
}

bool Strategy3::valid_domain() const {
  return Strategy2{r, alpha}.closed_form_domain() && s >= 0.0 && beta >= 0.0 &&
         beta <= kPi;
}

const char* case_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::Case1: return "Case1";
    case CaseLabel::Case2: return "Case2";
    case CaseLabel::Case3: return "Case3";
    case CaseLabel::Case4: return "Case4";
    case CaseLabel::Case5: return "Case5";
    case CaseLabel::Sub31: return "Sub31";
    case CaseLabel::Sub32: return "Sub32";
  }
  return "?";
}

StripState normalize_state(double x, double theta) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("normalize_state: x outside [0, 1]");
  if (theta < -kPi || theta > kPi)
    throw std::domain_error("normalize_state: theta outside [-pi, pi]");
  if (theta >= 0.0) return {x, theta};
  return {1.0 - x, theta + kPi};
}

namespace {

// Threshold angles of the case partition. Only defined on the indicated side
// of the x +/- r comparisons; callers guard.
double right_threshold(double x, double r) { return safe_acos((1.0 - x) / r); }
double left_threshold(double x, double r) { return kPi - safe_acos(x / r); }

}  // namespace

CaseLabel classify_strip2(const StripState& st, const Strategy2& strat) {
  const double x = st.x, theta = st.theta, r = strat.r, a = strat.alpha;
  const bool reach_right = x + r >= 1.0;  // first segment can touch the right shore
  const bool reach_left = x - r <= 0.0;

  const double thr_r = reach_right ? right_threshold(x, r) : 0.0;
  const double thr_l = reach_left ? left_threshold(x, r) : 0.0;

  // Case 1: escapes right within the first segment.
  if (reach_right && theta <= thr_r) return CaseLabel::Case1;

  // Case 2: pivots, then exits left, with theta < pi/2 - alpha.
  if (((reach_right && theta > thr_r) || !reach_right) && theta < kPi / 2.0 - a)
    return CaseLabel::Case2;

  // Case 3: pivots, then exits right.
  {
    bool core = false;
    if (reach_right && reach_left)
      core = theta > thr_r && theta < thr_l;
    else if (!reach_right && reach_left)
      core = theta < thr_l;
    else if (reach_right && !reach_left)
      core = theta > thr_r;
    else
      core = true;
    if (core && theta >= kPi / 2.0 - a && theta <= 3.0 * kPi / 2.0 - a)
      return CaseLabel::Case3;
  }

  // Case 4: pivots, then exits left, with theta > 3pi/2 - alpha.
  if (((reach_left && theta < thr_l) || !reach_left) && theta > 3.0 * kPi / 2.0 - a)
    return CaseLabel::Case4;

  // Case 5: escapes left within the first segment.
  if (reach_left && theta >= thr_l) return CaseLabel::Case5;

  throw std::logic_error("classify_strip2: no case condition fired");
}

namespace {

double guarded_div(double num, double denom_angle, double eps, const char* where) {
  const double c = std::cos(denom_angle);
  if (std::fabs(c) < eps) throw SingularEvaluation(where);
  return num / c;
}

}  // namespace

double strip2_path_length(const StripState& st, const Strategy2& strat,
                          double singular_eps) {
  const double x = st.x, theta = st.theta, r = strat.r, a = strat.alpha;
  switch (classify_strip2(st, strat)) {
    case CaseLabel::Case1:
      return guarded_div(1.0 - x, theta, singular_eps, "case1 cos(theta)");
    case CaseLabel::Case2:
    case CaseLabel::Case4:
      return r + guarded_div(x + r * std::cos(theta), theta + a, singular_eps,
                             "case2/4 cos(theta+alpha)");
    case CaseLabel::Case3:
      return r + guarded_div(x - 1.0 + r * std::cos(theta), theta + a, singular_eps,
                             "case3 cos(theta+alpha)");
    case CaseLabel::Case5:
      return guarded_div(-x, theta, singular_eps, "case5 cos(theta)");
    default:
      throw std::logic_error("strip2_path_length: unexpected label");
  }
}

double theta0(double x, double r, double s, double alpha) {
  if (r <= 0.0) throw std::domain_error("theta0: r must be positive");
  const double kappa =
      std::sqrt(r * r + s * s - 2.0 * r * s * std::cos(alpha));
  if ((1.0 - x) / kappa > 1.0 + 1e-12)
    throw std::domain_error("theta0: two segments cannot reach the right shore");
  const double rho = safe_asin(s * std::sin(alpha) / kappa);
  return rho + safe_acos((1.0 - x) / kappa);
}

ThreeSegIntermediates three_seg_intermediates(double x, const Strategy3& strat) {
  const double r = strat.r, a = strat.alpha, s = strat.s, b = strat.beta;
  ThreeSegIntermediates q;
  q.kappa = std::sqrt(r * r + s * s - 2.0 * r * s * std::cos(a));
  q.rho = safe_asin(s * std::sin(a) / q.kappa);
  q.theta0 = q.rho + safe_acos((1.0 - x) / q.kappa);
  q.u1 = r * std::sin(a);
  q.u2 = s * std::sin(b) - r * std::sin(a + b);
  q.v1 = r * (1.0 + std::cos(a));
  q.v2 = r + s + s * std::cos(b) - r * std::cos(a + b);
  q.xi1 = a + safe_acos((1.0 - x) / r);
  q.xi2 = a + b + q.rho + safe_acos((1.0 - x) / q.kappa);
  q.eta1 = a + q.rho + safe_acos((1.0 - x) / q.kappa);
  q.eta2 = a + b + kPi - safe_acos(x / r);
  return q;
}

CaseLabel classify_strip3(const StripState& st, const Strategy3& strat) {
  if (!strat.valid_domain())
    throw std::domain_error("classify_strip3: strategy outside the 3-segment domain");
  const double x = st.x, theta = st.theta, r = strat.r;
  if (theta <= right_threshold(x, r)) return CaseLabel::Case1;
  if (theta >= left_threshold(x, r)) return CaseLabel::Case5;
  if (theta <= theta0(x, r, strat.s, strat.alpha)) return CaseLabel::Sub31;
  return CaseLabel::Sub32;
}

double strip3_path_length(const StripState& st, const Strategy3& strat,
                          double singular_eps, bool check_validity) {
  const double x = st.x, theta = st.theta;
  const double r = strat.r, a = strat.alpha, s = strat.s, b = strat.beta;
  const CaseLabel label = classify_strip3(st, strat);
  double len;
  switch (label) {
    case CaseLabel::Case1:
      len = guarded_div(1.0 - x, theta, singular_eps, "case1 cos(theta)");
      break;
    case CaseLabel::Case5:
      len = guarded_div(-x, theta, singular_eps, "case5 cos(theta)");
      break;
    case CaseLabel::Sub31:
      len = r + guarded_div(x - 1.0 + r * std::cos(theta), theta + a, singular_eps,
                            "sub31 cos(theta+alpha)");
      break;
    case CaseLabel::Sub32:
      len = r + s +
            guarded_div(1.0 - x + s * std::cos(theta + a) - r * std::cos(theta),
                        theta + a + b, singular_eps, "sub32 cos(theta+alpha+beta)");
      break;
    default:
      throw std::logic_error("strip3_path_length: unexpected label");
  }
  if (check_validity && label == CaseLabel::Sub32) {
    auto [headings, caps] = strategy_to_headings(theta, strat);
    const EscapeRealization real = raycast(RegionTag::Strip, {x, 0.0}, headings, caps);
    if (!real.escaped || real.exit_side != ExitSide::Right ||
        std::fabs(real.total_length - len) > 1e-8)
      throw InvalidStrategy3("third segment does not exit through the right shore");
  }
  return len;
}

double straight_strip_length(const StripState& st, double singular_eps) {
  if (st.theta < kPi / 2.0)
    return guarded_div(1.0 - st.x, st.theta, singular_eps, "straight cos(theta)");
  return guarded_div(-st.x, st.theta, singular_eps, "straight cos(theta)");
}

}  // namespace escape
