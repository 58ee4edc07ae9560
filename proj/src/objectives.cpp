#include "escape/objectives.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace escape {

namespace {

double checked_log(double arg, const char* where) {
  if (!(arg > 0.0))
    throw std::domain_error(std::string("log argument <= 0 in ") + where +
                            " (value " + std::to_string(arg) + ")");
  return std::log(arg);
}

}  // namespace

ObjectiveValue strip2_expected(const Strategy2& strat) {
  if (!strat.closed_form_domain())
    throw std::domain_error("strip2_expected: (r, alpha) outside the closed-form domain");
  const double r = strat.r, a = strat.alpha;
  const double sq = std::sqrt(r * r - 1.0);
  const double sa = std::sin(a), ca = std::cos(a);
  const double P = r * r * sa * sa;

  double v = r * ((1.0 + ca) * (kPi / 2.0 + sq - r) - (2.0 + ca) * std::acos(1.0 / r) +
                  kPi / 2.0);
  v += checked_log(sq + r, "strip2 term 2");
  v += 0.5 * r * r * checked_log(1.0 - ca, "strip2 term 3") * sa * sa;
  v += r * sa * checked_log((sq * sa - ca) / (r * sa), "strip2 term 4");
  v += 0.25 * (P + 1.0) * checked_log(sq * ca + sa + r, "strip2 term 5");
  v += 0.25 * (P - 1.0) * checked_log(sq * ca - sa + r, "strip2 term 6");
  v -= 0.25 * (P + 1.0) *
       checked_log(-sq * ca * ca - (sa + sq - r) * ca - sa + r, "strip2 term 7");
  v -= 0.25 * (P - 1.0) *
       checked_log(-sq * ca * ca + (sa - sq + r) * ca + sa + r, "strip2 term 8");
  return {v / kPi, EvalMethod::ClosedForm, 1e-14};
}

ObjectiveValue strip2_expected_quad(const Strategy2& strat, const QuadratureSpec& outer) {
  if (!strat.closed_form_domain())
    throw std::domain_error("strip2_expected_quad: outside the Case 1/3/5 domain");
  const double r = strat.r, a = strat.alpha;

  QuadratureSpec inner = outer;
  inner.abs_tol = outer.abs_tol / 10.0;
  inner.rel_tol = 0.0;

  auto inner_val = [&](double x) {
    const double A = safe_acos((1.0 - x) / r);
    const double B = kPi - safe_acos(x / r);
    QuadratureSpec mid = inner;
    // cos(theta + alpha) roots, in case they land inside [A, B]
    mid.split_points = {kPi / 2.0 - a, 3.0 * kPi / 2.0 - a};
    const double i1 = integrate_checked(
        [&](double t) { return (1.0 - x) / std::cos(t); }, 0.0, A, inner);
    const double i2 = integrate_checked(
        [&](double t) { return r + (x - 1.0 + r * std::cos(t)) / std::cos(t + a); }, A,
        B, mid);
    const double i3 =
        integrate_checked([&](double t) { return -x / std::cos(t); }, B, kPi, inner);
    return i1 + i2 + i3;
  };

  IntegralResult res = integrate(inner_val, 0.0, 1.0, outer);
  if (!res.converged)
    throw std::runtime_error("strip2_expected_quad: outer quadrature did not converge");
  return {res.value / kPi, EvalMethod::Quadrature, res.error_bound / kPi};
}

double strip3_integrand(double x, const Strategy3& strat) {
  const ThreeSegIntermediates q = three_seg_intermediates(x, strat);
  const double u[2] = {q.u1, q.u2};
  const double v[2] = {q.v1, q.v2};
  const double xi[2] = {q.xi1, q.xi2};
  const double eta[2] = {q.eta1, q.eta2};
  double total = 0.0;
  for (int j = 0; j < 2; ++j) {
    const double sxi = std::sin(xi[j]), seta = std::sin(eta[j]);
    const double ratio = std::fabs(std::cos(xi[j]) / std::cos(eta[j]));
    const double num = sxi * (seta + 1.0) - seta - 1.0;
    const double den = sxi * (seta - 1.0) + seta - 1.0;
    const double sign = (j == 0) ? -1.0 : 1.0;  // (-1)^j for j = 1, 2
    total += u[j] * checked_log(ratio, "p_j first log") +
             sign * (1.0 - x) / 2.0 * checked_log(num / den, "p_j second log") +
             v[j] * (eta[j] - xi[j]);
  }
  return total;
}

ObjectiveValue strip3_expected(const Strategy3& strat, const QuadratureSpec& spec) {
  if (!strat.valid_domain())
    throw std::domain_error("strip3_expected: strategy outside the 3-segment domain");
  // The piecewise integration limits assume the heading thresholds are
  // ordered arccos((1-x)/r) <= theta0(x) <= pi - arccos(x/r) for every x;
  // otherwise the p_j formulas integrate over the wrong regions.
  for (int i = 0; i <= 40; ++i) {
    const double x = 0.0125 + 0.975 * i / 40.0;
    const double t0 = theta0(x, strat.r, strat.s, strat.alpha);  // throws if no root
    if (t0 < safe_acos((1.0 - x) / strat.r) - 1e-9 ||
        t0 > kPi - safe_acos(x / strat.r) + 1e-9)
      throw std::domain_error("strip3_expected: case thresholds out of order");
  }
  const double r = strat.r;
  const double sq = std::sqrt(r * r - 1.0);
  IntegralResult res =
      integrate([&](double x) { return strip3_integrand(x, strat); }, 0.0, 1.0, spec);
  if (!res.converged)
    throw std::runtime_error("strip3_expected: quadrature did not converge");
  const double v = std::log(sq + r) + r * (r - sq) + res.value;
  return {v / kPi, EvalMethod::Quadrature, res.error_bound / kPi};
}

ObjectiveValue disk_expected(const DiskStrategy& strat, const QuadratureSpec& outer) {
  const double r = strat.r, a = strat.alpha;
  QuadratureSpec inner = outer;
  inner.abs_tol = outer.abs_tol / 10.0;
  inner.rel_tol = 0.0;
  inner.split_points.clear();

  auto length = [&](double x, double th) {
    return disk_path_length({x, th}, strat);
  };

  // Inner theta integral over [-pi, pi]; the integrand has kinks at the
  // case boundary +/-phi and the omega branch switch +/-psi.
  auto f_inner = [&](double x) {
    QuadratureSpec spec = inner;
    if (x > 1e-14 && r > 1e-14 && x >= std::fabs(r - 1.0)) {
      const double phi = disk_phi(x, r);
      spec.split_points.push_back(phi);
      spec.split_points.push_back(-phi);
    }
    if (x > 1e-14 && r <= x) {
      const double psi = (r > 1e-14) ? disk_psi(x, r) : kPi / 2.0;
      spec.split_points.push_back(psi);
      spec.split_points.push_back(-psi);
    }
    return integrate_checked([&](double th) { return length(x, th); }, -kPi, kPi,
                             spec);
  };

  const double lo = std::fabs(r - 1.0);
  double I = 0.0;
  if (lo < 1.0) {
    IntegralResult res =
        integrate([&](double x) { return f_inner(x) * x; }, lo, 1.0, outer);
    if (!res.converged)
      throw std::runtime_error("disk_expected: I quadrature did not converge");
    I = res.value / kPi;
  }
  double J = 0.0;
  if (lo > 0.0) {
    // r >= 1: every theta escapes within r; r < 1: no theta does.
    IntegralResult res =
        integrate([&](double x) { return f_inner(x) * x; }, 0.0, lo, outer);
    if (!res.converged)
      throw std::runtime_error("disk_expected: J quadrature did not converge");
    J = res.value / kPi;
  }
  (void)a;
  return {I + J, EvalMethod::Quadrature, outer.abs_tol};
}

}  // namespace escape
