#pragma once

#include <functional>
#include <vector>

namespace escape {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_subdivisions = 4000;
  std::vector<double> split_points;  // known kinks / integrable singularities
};

struct IntegralResult {
  double value = 0.0;
  double error_bound = 0.0;
  bool converged = false;
  int panels = 0;
};

/// Globally adaptive Gauss-Kronrod 7-15 on [a, b]. The interval is pre-split
/// at every spec.split_points entry that falls inside (a, b); the worst panel
/// is bisected until the summed error estimate meets the tolerance.
IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& spec = {});

/// As integrate(), but throws std::runtime_error on non-convergence.
double integrate_checked(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& spec = {});

}  // namespace escape
