#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace escape {

using Objective = std::function<double(const std::vector<double>&)>;

struct Bounds {
  std::vector<double> lo;
  std::vector<double> hi;

  std::vector<double> clip(std::vector<double> x) const;
};

struct OptimizationResult {
  std::vector<double> params;
  double value = 0.0;
  long evaluations = 0;
  bool converged = false;
  int start_index = 0;
};

/// Bounded Nelder-Mead: candidate vertices are projected into the box before
/// evaluation. Converges when the simplex diameter and value spread fall
/// below `tol`. Deterministic for a fixed x0.
OptimizationResult minimize(const Objective& f, std::vector<double> x0,
                            const Bounds& bounds, double tol = 1e-10,
                            long max_iterations = 20000);

/// Best of n seeded uniform starts in the box; ties resolved by start index.
OptimizationResult multistart(const Objective& f, const Bounds& bounds, int n_starts,
                              std::uint64_t seed, double tol = 1e-10,
                              long max_iterations = 20000);

/// Central finite differences, componentwise error O(h^2).
std::vector<double> finite_diff_gradient(const Objective& f,
                                         const std::vector<double>& x, double h);

}  // namespace escape
