#pragma once

#include <stdexcept>

#include "escape/geom.hpp"
#include "escape/strip.hpp"  // CaseLabel

namespace escape {

/// Initial condition on the unit disk; the start is placed at (x, 0).
struct DiskState {
  double x;      // radial coordinate, in [0, 1]
  double theta;  // heading, in [-pi, pi]
};

/// Two-segment disk strategy: walk r (at most the diameter), pivot alpha.
struct DiskStrategy {
  double r;      // in [0, 2]
  double alpha;  // in [0, pi]; pi continues straight
};

enum class DiskCase { Case1Prime, Case2Prime };

const char* disk_case_name(DiskCase c);

/// Half-angle of the heading fan that escapes within distance r:
/// phi = arccos((1 - x^2 - r^2) / (2 x r)). Exists iff x >= |r - 1|.
double disk_phi(double x, double r);

/// Branch threshold psi = arccos(-r / x); needs x >= r > 0... r = 0 gives pi/2.
double disk_psi(double x, double r);

DiskCase disk_classify(const DiskState& st, const DiskStrategy& strat);

/// Everything the Case 2' length formula touches, exposed for testing.
struct DiskGeometry {
  DiskCase label;
  double q;      // one-segment escape distance
  double y;      // distance from the center after walking r
  double omega;  // auxiliary-triangle angle (two-branch rule)
  double s;      // second-segment length (Case 2' only)
};

DiskGeometry disk_geometry(const DiskState& st, const DiskStrategy& strat);

/// Case 1' -> q; Case 2' -> r + s.
double disk_path_length(const DiskState& st, const DiskStrategy& strat);

}  // namespace escape
