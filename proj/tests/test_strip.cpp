#include <doctest.h>

#include <cmath>

#include "escape/oracle.hpp"
#include "escape/rng.hpp"
#include "escape/strip.hpp"

using namespace escape;

TEST_CASE("normalize_state folds negative headings by double reflection") {
  const StripState a = normalize_state(0.3, 1.0);
  CHECK(a.x == doctest::Approx(0.3));
  CHECK(a.theta == doctest::Approx(1.0));

  const StripState b = normalize_state(0.3, -1.0);
  CHECK(b.x == doctest::Approx(0.7));
  CHECK(b.theta == doctest::Approx(kPi - 1.0));

  const StripState c = normalize_state(1.0, -kPi);
  CHECK(c.x == doctest::Approx(0.0));
  CHECK(c.theta == doctest::Approx(0.0));

  CHECK_THROWS_AS(normalize_state(1.2, 0.0), std::domain_error);
  CHECK_THROWS_AS(normalize_state(0.5, 4.0), std::domain_error);
}

TEST_CASE("case classification at the published strategy") {
  const Strategy2 strat{1.0433, deg_to_rad(78.7)};
  CHECK(classify_strip2({0.5, deg_to_rad(50.0)}, strat) == CaseLabel::Case1);
  CHECK(classify_strip2({0.3, deg_to_rad(160.0)}, strat) == CaseLabel::Case5);
  CHECK(classify_strip2({0.9, deg_to_rad(140.0)}, strat) == CaseLabel::Case3);
}

TEST_CASE("small r exercises cases 2 and 4") {
  const Strategy2 strat{0.2, 0.3};
  // theta < pi/2 - alpha and the first segment cannot reach a shore.
  CHECK(classify_strip2({0.5, 0.5}, strat) == CaseLabel::Case2);
  // theta > 3pi/2 - alpha requires alpha > pi/2.
  const Strategy2 wide{0.2, 2.0};
  CHECK(classify_strip2({0.5, 3.0}, wide) == CaseLabel::Case4);
}

TEST_CASE("per-case lengths") {
  const Strategy2 strat{1.0433, deg_to_rad(78.7)};
  CHECK(strip2_path_length({0.5, 0.0}, strat) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(strip2_path_length({0.3, deg_to_rad(160.0)}, strat) ==
        doctest::Approx(0.3 / std::cos(deg_to_rad(20.0))).epsilon(1e-13));
}

TEST_CASE("singular denominators are signalled") {
  // Case 1 with theta at pi/2 is unreachable; force a case-3 singular instead:
  // theta + alpha = 3 pi / 2.
  // x = 0.8 keeps the first segment away from both shores, so the state is
  // Case 3 with a vertical second heading.
  const Strategy2 strat{1.2, 2.6};
  const double theta = 3.0 * kPi / 2.0 - strat.alpha;
  CHECK(classify_strip2({0.8, theta}, strat) == CaseLabel::Case3);
  CHECK_THROWS_AS(strip2_path_length({0.8, theta}, strat), SingularEvaluation);
}

TEST_CASE("analytic strip2 lengths agree with the raycast oracle") {
  double worst = 0.0;
  long done = 0;
  for (std::uint64_t i = 0; done < 10000; ++i) {
    const Strategy2 strat{0.05 + 2.95 * uniform01(11, 4 * i),
                          kPi * uniform01(11, 4 * i + 1)};
    const StripState st{uniform01(11, 4 * i + 2), kPi * uniform01(11, 4 * i + 3)};
    // Near-vertical headings make the length ~1/|cos|, so compare relative.
    if (std::fabs(std::cos(st.theta)) < 1e-6 ||
        std::fabs(std::cos(st.theta + strat.alpha)) < 1e-6)
      continue;
    auto [h, c] = strategy_to_headings(st.theta, strat);
    const double oracle = raycast(RegionTag::Strip, {st.x, 0.0}, h, c).total_length;
    worst = std::fmax(worst, std::fabs(strip2_path_length(st, strat) - oracle) /
                                 std::fmax(1.0, oracle));
    ++done;
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("theta0 reduces to the case thresholds at the edges") {
  CHECK(theta0(0.4, 1.3, 0.0, 1.0) == doctest::Approx(std::acos(0.6 / 1.3)).epsilon(1e-14));
  CHECK(theta0(0.4, 1.3, 0.5, kPi) ==
        doctest::Approx(std::acos(0.6 / 1.8)).epsilon(1e-13));
}

TEST_CASE("theta0 solves its defining equation") {
  const double x = 0.5, r = 1.02551, s = 0.53063, a = 1.49098;
  const double t0 = theta0(x, r, s, a);
  CHECK(std::fabs(1.0 - x - r * std::cos(t0) + s * std::cos(t0 + a)) < 1e-12);
}

TEST_CASE("theta0 rejects unreachable shores") {
  // kappa = |r - s| when alpha = 0; choose kappa < 1 - x.
  CHECK_THROWS_AS(theta0(0.0, 1.0, 0.5, 0.0), std::domain_error);
}

TEST_CASE("three-segment classification") {
  const Strategy3 opt{1.0255050653, 1.4909825316, 0.5306340577, 2.7495709960};
  CHECK(classify_strip3({0.5, 0.0}, opt) == CaseLabel::Case1);
  CHECK(classify_strip3({0.5, kPi}, opt) == CaseLabel::Case5);
  const double t0 = theta0(0.5, opt.r, opt.s, opt.alpha);
  CHECK(classify_strip3({0.5, t0 + 1e-6}, opt) == CaseLabel::Sub32);
  CHECK(classify_strip3({0.5, t0 - 1e-6}, opt) == CaseLabel::Sub31);
}

TEST_CASE("beta = pi collapses the third segment") {
  const Strategy2 s2{1.2, 1.3};
  const Strategy3 s3{1.2, 1.3, 0.6, kPi};
  for (std::uint64_t i = 0; i < 5000; ++i) {
    const StripState st{uniform01(13, 2 * i), kPi * uniform01(13, 2 * i + 1)};
    if (std::fabs(std::cos(st.theta)) < 1e-6 ||
        std::fabs(std::cos(st.theta + 1.3)) < 1e-6)
      continue;
    CHECK(strip3_path_length(st, s3) ==
          doctest::Approx(strip2_path_length(st, s2)).epsilon(1e-12));
  }
}

TEST_CASE("s = 0 folds the two pivots into one") {
  const double r = 1.2, a = 1.2, b = 2.6;       // folded pivot a + b - pi in (0, pi)
  const Strategy3 s3{r, a, 0.0, b};
  const Strategy2 folded{r, a + b - kPi};
  for (std::uint64_t i = 0; i < 5000; ++i) {
    const StripState st{uniform01(17, 2 * i), kPi * uniform01(17, 2 * i + 1)};
    if (classify_strip3(st, s3) != CaseLabel::Sub32) continue;
    if (classify_strip2(st, folded) != CaseLabel::Case3) continue;
    if (std::fabs(std::cos(st.theta + a + b)) < 1e-6) continue;
    CHECK(strip3_path_length(st, s3) ==
          doctest::Approx(strip2_path_length(st, folded)).epsilon(1e-12));
  }
}

TEST_CASE("analytic strip3 lengths agree with the raycast oracle") {
  double worst = 0.0;
  long done = 0;
  for (std::uint64_t i = 0; done < 10000; ++i) {
    const double r = 1.02 + 0.58 * uniform01(19, 6 * i);
    const double lo = kPi / 2.0 - std::acos(1.0 / r);
    const double a = lo + (kPi / 2.0 - lo) * (0.02 + 0.96 * uniform01(19, 6 * i + 1));
    const Strategy3 strat{r, a, 1.2 * uniform01(19, 6 * i + 2),
                          0.2 + (kPi - 0.2) * uniform01(19, 6 * i + 3)};
    const StripState st{uniform01(19, 6 * i + 4), kPi * uniform01(19, 6 * i + 5)};
    if (std::fabs(std::cos(st.theta)) < 1e-6 ||
        std::fabs(std::cos(st.theta + strat.alpha)) < 1e-6 ||
        std::fabs(std::cos(st.theta + strat.alpha + strat.beta)) < 1e-6)
      continue;
    double analytic;
    try {
      analytic = strip3_path_length(st, strat, 1e-12, true);
    } catch (const InvalidStrategy3&) {
      continue;
    } catch (const std::domain_error&) {
      continue;
    }
    auto [h, c] = strategy_to_headings(st.theta, strat);
    const double oracle = raycast(RegionTag::Strip, {st.x, 0.0}, h, c).total_length;
    worst = std::fmax(worst, std::fabs(analytic - oracle));
    ++done;
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("invalid beta is detected via the raycast screen") {
  // A tiny beta turns the third segment back toward the left shore.
  const Strategy3 strat{1.05, 1.4, 0.8, 0.05};
  const double t0 = theta0(0.5, strat.r, strat.s, strat.alpha);
  const double hi = kPi - std::acos(0.5 / strat.r);
  const StripState st{0.5, 0.5 * (t0 + hi)};
  REQUIRE(classify_strip3(st, strat) == CaseLabel::Sub32);
  CHECK_THROWS_AS(strip3_path_length(st, strat, 1e-12, true), InvalidStrategy3);
}

TEST_CASE("straight strategy length is the paper's q variable") {
  CHECK(straight_strip_length({0.25, 1.0}) ==
        doctest::Approx(0.75 / std::cos(1.0)).epsilon(1e-14));
  CHECK(straight_strip_length({0.25, 2.5}) ==
        doctest::Approx(-0.25 / std::cos(2.5)).epsilon(1e-14));
}
