#pragma once

#include <stdexcept>
#include <string>

#include "escape/geom.hpp"

namespace escape {

/// Initial condition on the unit-width strip {0 <= x <= 1}, after the
/// reflection that folds negative headings into [0, pi].
struct StripState {
  double x;      // distance from the left shore, in [0, 1]
  double theta;  // heading from the +x axis, in [0, pi]
};

/// Two-segment strategy: walk r, pivot by alpha, walk to a shore.
/// alpha = pi continues straight, alpha = 0 reverses.
struct Strategy2 {
  double r;
  double alpha;

  /// The closed-form expected-length formula additionally needs
  /// r > 1 and 0 < pi/2 - alpha < arccos(1/r).
  bool closed_form_domain() const;
};

/// Three-segment strategy: walk r, pivot alpha, walk s, pivot beta, walk out.
struct Strategy3 {
  double r;
  double alpha;
  double s;
  double beta;

  bool valid_domain() const;  // Strategy2 closed-form domain plus s >= 0, beta in [0, pi]
};

enum class CaseLabel { Case1, Case2, Case3, Case4, Case5, Sub31, Sub32 };

const char* case_name(CaseLabel c);

/// Raised when a path-length denominator cos(..) is within eps of zero.
struct SingularEvaluation : std::runtime_error {
  explicit SingularEvaluation(const std::string& what) : std::runtime_error(what) {}
};

/// Fold a heading in [-pi, pi] into the canonical [0, pi] band via the
/// reflection (x, theta) -> (1 - x, theta + pi) for theta < 0.
StripState normalize_state(double x, double theta);

/// Which of the five escape cases (state, strategy) falls in. Boundary ties
/// go to the lowest-numbered case.
CaseLabel classify_strip2(const StripState& st, const Strategy2& strat);

/// Exact per-case escape length for a two-segment strategy.
double strip2_path_length(const StripState& st, const Strategy2& strat,
                          double singular_eps = 1e-12);

/// Intermediate quantities of the three-segment expected-length integrand.
struct ThreeSegIntermediates {
  double theta0;
  double kappa, rho;
  double u1, u2;
  double v1, v2;
  double xi1, xi2;
  double eta1, eta2;
};

/// Heading that separates subcase 3.1 from 3.2:
/// theta0 = arcsin(s sin a / kappa) + arccos((1-x)/kappa),
/// the root of 1 - x - r cos(t) + s cos(t + a) = 0.
double theta0(double x, double r, double s, double alpha);

ThreeSegIntermediates three_seg_intermediates(double x, const Strategy3& strat);

/// Case classification under the three-segment domain restriction
/// (only Case1, Sub31, Sub32, Case5 can occur).
CaseLabel classify_strip3(const StripState& st, const Strategy3& strat);

/// Escape length for a three-segment strategy. `check_validity` also runs the
/// geometric raycast and rejects configurations whose third segment fails to
/// exit through the right shore (beta too small, self-crossing path).
double strip3_path_length(const StripState& st, const Strategy3& strat,
                          double singular_eps = 1e-12, bool check_validity = false);

struct InvalidStrategy3 : std::runtime_error {
  explicit InvalidStrategy3(const std::string& what) : std::runtime_error(what) {}
};

/// Escape length of the never-pivot ("r = infinity") strategy: the random
/// variable q = (1-x)/cos(theta) for theta < pi/2, else -x/cos(theta).
double straight_strip_length(const StripState& st, double singular_eps = 1e-12);

}  // namespace escape
