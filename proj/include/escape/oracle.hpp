#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "escape/geom.hpp"

namespace escape {

struct Strategy2;
struct Strategy3;
struct DiskStrategy;

enum class RegionTag { Strip, Disk };
enum class ExitSide { Left, Right, Circle };

/// Concrete polyline a (state, strategy) produces, with total length.
struct EscapeRealization {
  std::vector<Vec2> vertices;
  double total_length = 0.0;
  bool escaped = false;
  std::optional<ExitSide> exit_side;
};

/// Walks segments from `start` with the given absolute headings; each segment
/// ends at min(cap, boundary hit). The final cap should be infinite. Ground
/// truth for every analytic length formula.
EscapeRealization raycast(RegionTag region, Vec2 start,
                          const std::vector<double>& headings,
                          const std::vector<double>& caps);

/// Pivot convention: pivoting by gamma maps heading h to h + gamma - pi.
std::pair<std::vector<double>, std::vector<double>> strategy_to_headings(
    double theta, const Strategy2& strat);
std::pair<std::vector<double>, std::vector<double>> strategy_to_headings(
    double theta, const Strategy3& strat);
std::pair<std::vector<double>, std::vector<double>> strategy_to_headings(
    double theta, const DiskStrategy& strat);

}  // namespace escape
