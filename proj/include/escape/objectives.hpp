#pragma once

#include "escape/disk.hpp"
#include "escape/quadrature.hpp"
#include "escape/strip.hpp"

namespace escape {

enum class EvalMethod { ClosedForm, Quadrature };

/// Expected escape length (strip widths / disk radii; the pi factor in the
/// printed displays is divided out).
struct ObjectiveValue {
  double value;
  EvalMethod method;
  double est_error;
};

/// Exact expected length for a two-segment strip strategy, from the closed
/// form valid when r > 1 and 0 < pi/2 - alpha < arccos(1/r).
ObjectiveValue strip2_expected(const Strategy2& strat);

/// Quadrature twin of strip2_expected: nested integration of the Case 1/3/5
/// integrand. Guards the long closed form against transcription slips.
ObjectiveValue strip2_expected_quad(const Strategy2& strat,
                                    const QuadratureSpec& outer = {});

/// Three-segment strip objective: closed Case 1/5 terms plus the integral of
/// p1 + p2 over x.
ObjectiveValue strip3_expected(const Strategy3& strat,
                               const QuadratureSpec& spec = {});

/// Disk objective I + J via nested quadrature.
ObjectiveValue disk_expected(const DiskStrategy& strat,
                             const QuadratureSpec& outer = {1e-9, 0.0, 4000, {}});

/// p1 + p2 integrand of the three-segment objective (exposed for tests).
double strip3_integrand(double x, const Strategy3& strat);

}  // namespace escape
