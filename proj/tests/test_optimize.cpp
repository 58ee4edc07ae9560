#include <doctest.h>

#include <cmath>
#include <vector>

#include "escape/geom.hpp"
#include "escape/optimize.hpp"

using namespace escape;

TEST_CASE("quadratic bowl") {
  const Objective f = [](const std::vector<double>& p) {
    return (p[0] - 1.0) * (p[0] - 1.0) + 2.0 * (p[1] + 0.5) * (p[1] + 0.5);
  };
  const Bounds b{{-3.0, -3.0}, {3.0, 3.0}};
  const OptimizationResult r = minimize(f, {2.5, 2.5}, b, 1e-12);
  CHECK(r.converged);
  CHECK(r.params[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.params[1] == doctest::Approx(-0.5).epsilon(1e-6));
  CHECK(r.value == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
}

TEST_CASE("iterates stay inside the box and land on an active bound") {
  const Objective f = [](const std::vector<double>& p) { return p[0]; };
  const Bounds b{{0.25}, {2.0}};
  const OptimizationResult r = minimize(f, {1.5}, b, 1e-12);
  CHECK(r.params[0] >= 0.25 - 1e-15);
  CHECK(r.params[0] == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("multistart beats a single start on a multimodal surface") {
  // Two-well function: global minimum -1 at x = 2, local minimum -0.4 at x = -2.
  const Objective f = [](const std::vector<double>& p) {
    const double x = p[0];
    return -std::exp(-(x - 2.0) * (x - 2.0)) -
           0.4 * std::exp(-4.0 * (x + 2.0) * (x + 2.0));
  };
  const Bounds b{{-4.0}, {4.0}};
  // A start in the shallow well converges to it.
  const OptimizationResult local = minimize(f, {-2.1}, b, 1e-12);
  CHECK(local.params[0] == doctest::Approx(-2.0).epsilon(1e-4));
  // Multistart finds the deep well.
  const OptimizationResult global = multistart(f, b, 16, 42, 1e-12);
  CHECK(global.converged);
  CHECK(global.params[0] == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(global.value == doctest::Approx(-1.0).epsilon(1e-8));

  // Grid-scan oracle: the multistart value is at least as good as a fine scan.
  double best_scan = 1e300;
  for (int i = 0; i <= 4000; ++i)
    best_scan = std::fmin(best_scan, f({-4.0 + 8.0 * i / 4000.0}));
  CHECK(global.value <= best_scan + 1e-8);
}

TEST_CASE("multistart is deterministic for a fixed seed") {
  const Objective f = [](const std::vector<double>& p) {
    return std::cos(3.0 * p[0]) + p[0] * p[0] / 10.0 + std::sin(2.0 * p[1]);
  };
  const Bounds b{{-3.0, -3.0}, {3.0, 3.0}};
  const OptimizationResult a = multistart(f, b, 12, 99);
  const OptimizationResult c = multistart(f, b, 12, 99);
  CHECK(a.params[0] == c.params[0]);
  CHECK(a.params[1] == c.params[1]);
  CHECK(a.value == c.value);
  CHECK(a.start_index == c.start_index);
}

TEST_CASE("finite-difference gradient of x^3 at 2 is 12 to O(h^2)") {
  const Objective f = [](const std::vector<double>& p) {
    return p[0] * p[0] * p[0];
  };
  const std::vector<double> g = finite_diff_gradient(f, {2.0}, 1e-5);
  CHECK(g[0] == doctest::Approx(12.0).epsilon(1e-8));
}

TEST_CASE("clip projects componentwise") {
  const Bounds b{{0.0, -1.0}, {1.0, 1.0}};
  const std::vector<double> p = b.clip({-0.5, 2.0});
  CHECK(p[0] == 0.0);
  CHECK(p[1] == 1.0);
}
