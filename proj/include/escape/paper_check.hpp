#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "escape/objectives.hpp"
#include "escape/optimize.hpp"

namespace escape {

// Reference values reproduced by the acceptance table.
namespace ref {
inline constexpr double kStrip2R = 1.0432668686;
inline constexpr double kStrip2Alpha = 1.3734935859;
inline constexpr double kStrip2Value = 0.8869669056;
inline constexpr double kStrip3R = 1.0255050653;
inline constexpr double kStrip3Alpha = 1.4909825316;
inline constexpr double kStrip3S = 0.5306340577;
inline constexpr double kStrip3Beta = 2.7495709960;
inline constexpr double kStrip3Value = 0.8835534788;
inline constexpr double kZalgallerFitValue = 0.9188;
inline constexpr double kZalgallerOwnEstimate = 0.9523;
inline constexpr double kDiskStraightValue = 0.8488263631;
inline constexpr double kStripMedian = 0.78;
inline constexpr double kDiskMedian = 0.94;
}  // namespace ref

/// Penalized objectives for the bounded simplex search. Outside the validity
/// region they return a large value that grows with the violation, so the
/// simplex is steered back toward the feasible set.
double strip2_search_objective(const std::vector<double>& p);
double strip3_search_objective(const std::vector<double>& p);
Bounds strip2_search_bounds();
Bounds strip3_search_bounds();

OptimizationResult optimize_strip2(double tol = 1e-10);
OptimizationResult optimize_strip3(int n_starts = 32, std::uint64_t seed = 7,
                                   double tol = 1e-9);

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full acceptance table (one entry per criterion).
std::vector<CriterionResult> run_paper_check();

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace escape
