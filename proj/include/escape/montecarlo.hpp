#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "escape/disk.hpp"
#include "escape/oracle.hpp"
#include "escape/strip.hpp"

namespace escape {

/// Strip "r = infinity" strategy: never pivot.
struct NoPivot {};

using AnyStrategy = std::variant<Strategy2, Strategy3, NoPivot, DiskStrategy>;

/// Point estimate from a seeded run; bit-identical for fixed (n, seed).
struct McEstimate {
  double point = 0.0;
  double std_error = 0.0;  // means: standard error; medians: 99% CI half-width
  long n = 0;
  std::uint64_t seed = 0;
  bool heavy_tail_warning = false;  // top 0.1% of draws carries > 10% of the mean
};

/// x ~ U[0,1], theta ~ U[-pi,pi] folded into [0, pi]. `index` is the draw
/// counter within stream `seed`.
StripState sample_strip_state(std::uint64_t seed, std::uint64_t index);

/// Area-uniform start: x = sqrt(U[0,1]), theta ~ U[-pi,pi].
DiskState sample_disk_state(std::uint64_t seed, std::uint64_t index);

/// Escape length of draw `index` under `strat` (strip strategies sample strip
/// states, disk strategies disk states).
double sample_length(const AnyStrategy& strat, std::uint64_t seed,
                     std::uint64_t index);

McEstimate estimate_mean(const AnyStrategy& strat, long n, std::uint64_t seed);
McEstimate estimate_median(const AnyStrategy& strat, long n, std::uint64_t seed);

struct MedianSweepRow {
  std::string label;
  McEstimate median;
};

McEstimate estimate_median_with_label(const AnyStrategy& strat, long n,
                                      std::uint64_t seed);
std::vector<MedianSweepRow> sweep_median(const std::vector<std::pair<std::string, AnyStrategy>>& grid,
                                         long n, std::uint64_t seed);

/// Sampled realizations (polylines) for plotting.
std::vector<EscapeRealization> export_realizations(const AnyStrategy& strat, int count,
                                                   std::uint64_t seed);

/// Worker cap: ESCAPE_OPTIM_THREADS env var, else hardware concurrency.
int worker_count();

}  // namespace escape
