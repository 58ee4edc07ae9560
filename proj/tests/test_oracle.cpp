#include <doctest.h>

#include <cmath>
#include <limits>

#include "escape/oracle.hpp"
#include "escape/rng.hpp"
#include "escape/strip.hpp"

using namespace escape;

namespace {
const double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("straight walk across the strip") {
  const EscapeRealization r = raycast(RegionTag::Strip, {0.5, 0.0}, {0.0}, {inf});
  CHECK(r.escaped);
  CHECK(r.exit_side == ExitSide::Right);
  CHECK(r.total_length == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("any ray from the disk center has length 1") {
  for (double th : {0.0, 0.7, -2.1, 3.1}) {
    const EscapeRealization r = raycast(RegionTag::Disk, {0.0, 0.0}, {th}, {inf});
    CHECK(r.escaped);
    CHECK(r.total_length == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("disk exit point satisfies the boundary equation to 1e-14") {
  for (int i = 0; i < 1000; ++i) {
    const double x = 0.99 * uniform01(7, 3 * i);
    const double th = -kPi + 2.0 * kPi * uniform01(7, 3 * i + 1);
    const double cap = 2.0 * uniform01(7, 3 * i + 2);
    const EscapeRealization r =
        raycast(RegionTag::Disk, {x, 0.0}, {th, th + 0.8}, {cap, inf});
    REQUIRE(r.escaped);
    CHECK(std::fabs(r.vertices.back().norm() - 1.0) <= 1e-14);
  }
}

TEST_CASE("caps shorter than the boundary distance produce intermediate vertices") {
  const EscapeRealization r =
      raycast(RegionTag::Strip, {0.3, 0.0}, {kPi / 2.0, 0.0}, {2.0, inf});
  REQUIRE(r.vertices.size() == 3);
  CHECK(r.vertices[1].y == doctest::Approx(2.0));
  CHECK(r.total_length == doctest::Approx(2.0 + 0.7).epsilon(1e-15));
  CHECK(r.exit_side == ExitSide::Right);
}

TEST_CASE("tangent-degenerate final segment reports non-escape") {
  const EscapeRealization r = raycast(RegionTag::Strip, {0.5, 0.0}, {kPi / 2.0}, {inf});
  CHECK_FALSE(r.escaped);
}

TEST_CASE("realization length is monotone in caps") {
  // theta = 1.4 cannot reach a shore within any of the caps below, so each
  // extra capped step only lengthens the realization.
  const StripState st{0.4, 1.4};
  const Strategy2 strat{1.3, 1.1};
  auto [h, c] = strategy_to_headings(st.theta, strat);
  const double full = raycast(RegionTag::Strip, {st.x, 0.0}, h, c).total_length;
  double prev = 0.0;
  for (double cap : {0.2, 0.6, 1.0, 1.3}) {
    const double len =
        raycast(RegionTag::Strip, {st.x, 0.0}, h, {cap, inf}).total_length;
    CHECK(len >= prev - 1e-12);  // this heading pair lengthens with the cap
    prev = len;
  }
  CHECK(prev == doctest::Approx(full).epsilon(1e-12));
}

TEST_CASE("pivot convention: alpha = pi continues straight") {
  const Strategy2 strat{0.4, kPi};
  auto [h, c] = strategy_to_headings(1.234, strat);
  CHECK(h[0] == doctest::Approx(1.234));
  CHECK(h[1] == doctest::Approx(1.234));
  CHECK(c[0] == doctest::Approx(0.4));
  CHECK(std::isinf(c[1]));

  const Strategy3 s3{1.1, 0.9, 0.5, 0.7};
  auto [h3, c3] = strategy_to_headings(0.3, s3);
  CHECK(h3[1] == doctest::Approx(0.3 + 0.9 - kPi));
  CHECK(h3[2] == doctest::Approx(0.3 + 0.9 + 0.7 - 2.0 * kPi));
}
