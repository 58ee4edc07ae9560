#include "escape/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "escape/rng.hpp"

namespace escape {

std::vector<double> Bounds::clip(std::vector<double> x) const {
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = std::fmin(hi[i], std::fmax(lo[i], x[i]));
  return x;
}

namespace {

double diameter(const std::vector<std::vector<double>>& simplex) {
  double d = 0.0;
  for (std::size_t i = 1; i < simplex.size(); ++i)
    for (std::size_t k = 0; k < simplex[i].size(); ++k)
      d = std::fmax(d, std::fabs(simplex[i][k] - simplex[0][k]));
  return d;
}

}  // namespace

OptimizationResult minimize(const Objective& f, std::vector<double> x0,
                            const Bounds& bounds, double tol, long max_iterations) {
  const std::size_t n = x0.size();
  if (bounds.lo.size() != n || bounds.hi.size() != n)
    throw std::invalid_argument("minimize: bounds dimension mismatch");

  long evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  x0 = bounds.clip(std::move(x0));
  std::vector<std::vector<double>> simplex{x0};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v = x0;
    double step = 0.05 * (bounds.hi[i] - bounds.lo[i]);
    if (step == 0.0) step = 1e-6;
    v[i] += (v[i] + step <= bounds.hi[i]) ? step : -step;
    simplex.push_back(bounds.clip(std::move(v)));
  }
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fv[i] = eval(simplex[i]);

  const double refl = 1.0, expa = 2.0, contr = 0.5, shrink = 0.5;
  bool converged = false;
  for (long it = 0; it < max_iterations; ++it) {
    std::vector<std::size_t> order(n + 1);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    {
      std::vector<std::vector<double>> s2;
      std::vector<double> f2;
      for (auto i : order) {
        s2.push_back(simplex[i]);
        f2.push_back(fv[i]);
      }
      simplex.swap(s2);
      fv.swap(f2);
    }

    if (diameter(simplex) < tol && std::fabs(fv[n] - fv[0]) < tol) {
      converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / double(n);

    auto blend = [&](double coef) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k)
        x[k] = centroid[k] + coef * (centroid[k] - simplex[n][k]);
      return bounds.clip(std::move(x));
    };

    std::vector<double> xr = blend(refl);
    const double fr = eval(xr);
    if (fr < fv[0]) {
      std::vector<double> xe = blend(expa);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[n] = std::move(xe);
        fv[n] = fe;
      } else {
        simplex[n] = std::move(xr);
        fv[n] = fr;
      }
    } else if (fr < fv[n - 1]) {
      simplex[n] = std::move(xr);
      fv[n] = fr;
    } else {
      const bool outside = fr < fv[n];
      std::vector<double> xc = blend(outside ? refl * contr : -contr);
      const double fc = eval(xc);
      if (fc < std::fmin(fr, fv[n])) {
        simplex[n] = std::move(xc);
        fv[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t k = 0; k < n; ++k)
            simplex[i][k] = simplex[0][k] + shrink * (simplex[i][k] - simplex[0][k]);
          simplex[i] = bounds.clip(std::move(simplex[i]));
          fv[i] = eval(simplex[i]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (fv[i] < fv[best]) best = i;

  OptimizationResult res;
  res.params = simplex[best];
  res.value = fv[best];
  res.evaluations = evals;
  res.converged = converged;
  return res;
}

OptimizationResult multistart(const Objective& f, const Bounds& bounds, int n_starts,
                              std::uint64_t seed, double tol, long max_iterations) {
  if (n_starts < 1) throw std::invalid_argument("multistart: n_starts >= 1");
  const std::size_t n = bounds.lo.size();
  OptimizationResult best;
  bool have = false;
  long total_evals = 0;
  for (int s = 0; s < n_starts; ++s) {
    std::vector<double> x0(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double u = uniform01(seed, std::uint64_t(s) * n + k);
      x0[k] = bounds.lo[k] + u * (bounds.hi[k] - bounds.lo[k]);
    }
    OptimizationResult r = minimize(f, std::move(x0), bounds, tol, max_iterations);
    total_evals += r.evaluations;
    r.start_index = s;
    if (!have || r.value < best.value) {
      best = std::move(r);
      have = true;
    }
  }
  best.evaluations = total_evals;
  return best;
}

std::vector<double> finite_diff_gradient(const Objective& f,
                                         const std::vector<double>& x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::vector<double> xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    g[k] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

}  // namespace escape
