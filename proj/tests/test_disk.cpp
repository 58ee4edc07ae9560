#include <doctest.h>

#include <cmath>

#include "escape/disk.hpp"
#include "escape/oracle.hpp"
#include "escape/rng.hpp"

using namespace escape;

TEST_CASE("disk_phi special values") {
  CHECK(disk_phi(1.0, 2.0) == doctest::Approx(kPi).epsilon(1e-14));
  for (double r : {0.3, 1.0, 1.7})
    CHECK(disk_phi(1.0, r) == doctest::Approx(std::acos(-r / 2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(disk_phi(0.2, 1.5), std::domain_error);
}

TEST_CASE("disk_phi marks the heading whose chord is exactly r") {
  const double x = 0.5, r = 0.6;
  const double phi = disk_phi(x, r);
  const double q = -x * std::cos(phi) + std::sqrt(1.0 - x * x * std::sin(phi) * std::sin(phi));
  CHECK(q == doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("disk_psi") {
  CHECK(disk_psi(0.7, 0.7) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(disk_psi(0.8, 0.4) == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(disk_psi(0.3, 0.5), std::domain_error);
}

TEST_CASE("case classification") {
  CHECK(disk_classify({0.4, 2.0}, {2.0, 1.0}) == DiskCase::Case1Prime);
  CHECK(disk_classify({0.4, 2.0}, {0.0, 1.0}) == DiskCase::Case2Prime);
  // Forward chord 0.5 <= r = 0.6: escapes within the first segment.
  CHECK(disk_classify({0.5, 0.0}, {0.6, 1.0}) == DiskCase::Case1Prime);
  // Backward chord 1.5 > r: the pivot happens inside the disk.
  CHECK(disk_classify({0.5, kPi}, {0.6, 1.0}) == DiskCase::Case2Prime);
}

TEST_CASE("lengths: center start and straight continuation") {
  for (double th : {-2.0, 0.0, 1.5})
    CHECK(disk_path_length({0.0, th}, {2.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
  // alpha = pi never bends the path: total equals the one-segment chord.
  for (std::uint64_t i = 0; i < 5000; ++i) {
    const DiskState st{std::sqrt(uniform01(23, 2 * i)),
                       -kPi + 2.0 * kPi * uniform01(23, 2 * i + 1)};
    const double q = -st.x * std::cos(st.theta) +
                     std::sqrt(1.0 - st.x * st.x * std::sin(st.theta) * std::sin(st.theta));
    CHECK(disk_path_length(st, {0.3, kPi}) == doctest::Approx(q).epsilon(1e-11));
  }
}

TEST_CASE("analytic disk lengths agree with the raycast oracle, both omega branches") {
  double worst = 0.0;
  long done = 0, first_branch = 0, second_branch = 0;
  for (std::uint64_t i = 0; done < 20000; ++i) {
    const DiskStrategy strat{0.001 + 1.999 * uniform01(29, 4 * i),
                             kPi * uniform01(29, 4 * i + 1)};
    const DiskState st{std::sqrt(uniform01(29, 4 * i + 2)),
                       -kPi + 2.0 * kPi * uniform01(29, 4 * i + 3)};
    if (st.x < 1e-6) continue;
    if (std::fabs(1.0 - st.x * st.x * std::sin(st.theta) * std::sin(st.theta)) < 1e-9)
      continue;
    const DiskGeometry g = disk_geometry(st, strat);
    if (g.label == DiskCase::Case2Prime) {
      const double sn = g.y * std::sin(strat.alpha + g.omega);
      if (g.y < 1e-6 || std::fabs(1.0 - sn * sn) < 1e-9) continue;
      (std::fabs(g.omega) > kPi / 2.0 ? second_branch : first_branch)++;
    }
    auto [h, c] = strategy_to_headings(st.theta, strat);
    const double oracle = raycast(RegionTag::Disk, {st.x, 0.0}, h, c).total_length;
    worst = std::fmax(worst, std::fabs(disk_path_length(st, strat) - oracle));
    ++done;
  }
  CHECK(worst < 1e-10);
  CHECK(first_branch > 0);
  CHECK(second_branch > 0);
}

TEST_CASE("mirror symmetry: negated heading with mirrored pivot") {
  // Pointwise length(x, theta) != length(x, -theta) for a fixed pivot
  // handedness; the mirror image flips the turn direction as well.
  const double inf = std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 5000; ++i) {
    const DiskState st{0.05 + 0.9 * uniform01(31, 2 * i),
                       kPi * uniform01(31, 2 * i + 1)};
    const DiskStrategy strat{0.7, 1.9};
    const double mirrored =
        raycast(RegionTag::Disk, {st.x, 0.0},
                {-st.theta, -st.theta - strat.alpha + kPi}, {strat.r, inf})
            .total_length;
    worst = std::fmax(worst, std::fabs(disk_path_length(st, strat) - mirrored));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("length bounds: at most r + 2, at least the nearest boundary") {
  for (std::uint64_t i = 0; i < 5000; ++i) {
    const DiskStrategy strat{2.0 * uniform01(37, 4 * i), kPi * uniform01(37, 4 * i + 1)};
    const DiskState st{std::sqrt(uniform01(37, 4 * i + 2)),
                       -kPi + 2.0 * kPi * uniform01(37, 4 * i + 3)};
    const double len = disk_path_length(st, strat);
    CHECK(len <= strat.r + 2.0 + 1e-12);
    CHECK(len >= 1.0 - st.x - 1e-12);
  }
}
