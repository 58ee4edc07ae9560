#pragma once

#include <vector>

#include "escape/geom.hpp"
#include "escape/strip.hpp"

namespace escape {

/// Zalgaller's heuristic escape curve in swimmer-relative coordinates:
/// five control points joined by segments, except for a small radius-1
/// circular arc (center E) between B and C.
struct ZalgallerPath {
  Vec2 A, B, C, D, E;
  double arc_angle;               // sweep of the B-C arc, radians
  std::vector<Vec2> polyline;     // densified (arc step <= 1e-3 rad)
};

ZalgallerPath build_zalgaller();

/// Chord-pair fit through the polyline's farthest interior vertex; the pivot
/// angle uses the supplement convention alpha = pi - turn.
Strategy2 fit_two_segment(const std::vector<Vec2>& polyline);

/// Analogous chord fit with two pivots (farthest vertex plus the interior
/// vertex most distant from the first chord). No reference values exist for
/// it; exposed for exploration.
Strategy3 fit_three_segment(const std::vector<Vec2>& polyline);

struct ZalgallerReport {
  Strategy2 fit;
  double expected;          // strip2 objective at the fitted strategy
  double optimum2;          // best two-segment expected length
  double optimum3;          // best three-segment expected length
  bool dominated;           // expected > optimum2
};

ZalgallerReport evaluate_zalgaller();

/// True iff no two non-adjacent segments of the polyline cross.
bool polyline_is_simple(const std::vector<Vec2>& polyline);

}  // namespace escape
