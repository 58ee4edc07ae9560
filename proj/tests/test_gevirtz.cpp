#include <doctest.h>

#include <cmath>
#include <sstream>

#include "escape/gevirtz.hpp"

using namespace escape;

TEST_CASE("straight curve: lambda(s) = s and s* = 2") {
  const CurveFrame frame(straight_curve());
  for (double s : {0.3, 1.0, 1.9})
    CHECK(frame.lambda(s) == doctest::Approx(s).epsilon(1e-13));
  CHECK(frame.s_star() == doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("straight curve attains the lower bound 8/(3 pi)") {
  const CurveFrame frame(straight_curve());
  CHECK(a_gamma_arc(frame) == doctest::Approx(kDiskLowerBound).epsilon(1e-9));
  const LowerBoundReport rep = check_lower_bound(frame);
  CHECK(rep.disjoint);
  CHECK(std::fabs(rep.slack) < 1e-9);
}

TEST_CASE("constant curvature: lambda(s) = (2/k) sin(k s / 2) below the cap") {
  const double k = 0.05;
  const CurveFrame frame(constant_curvature_curve(k));
  for (double s : {0.5, 1.0, 1.8}) {
    CHECK(frame.phi(s) == doctest::Approx(k * s).epsilon(1e-12));
    CHECK(frame.lambda(s) ==
          doctest::Approx(2.0 / k * std::sin(k * s / 2.0)).epsilon(1e-10));
  }
  CHECK(frame.s_star() > 2.0);
}

TEST_CASE("lambda is monotone up to s* for gentle curves") {
  for (double k : {0.0, 0.02, 0.1}) {
    const CurveFrame frame(k == 0.0 ? straight_curve()
                                    : constant_curvature_curve(k));
    double prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const double lam = frame.lambda(frame.s_star() * i / 200.0);
      CHECK(lam >= prev - 1e-12);
      prev = lam;
    }
  }
}

TEST_CASE("curved paths strictly exceed the lower bound") {
  for (double k : {0.02, 0.05, 0.1}) {
    const CurveFrame frame(constant_curvature_curve(k));
    REQUIRE(arcs_disjoint(frame));
    const LowerBoundReport rep = check_lower_bound(frame);
    CHECK(rep.slack > 0.0);
  }
}

TEST_CASE("a hairpin turn violates the disjoint-arc premise") {
  TurningCurve hairpin;
  hairpin.knot_s = {0.0, 0.8, 1.2, 3.0};
  hairpin.knot_phi = {0.0, 0.0, 1.45, 1.45};
  hairpin.phi_max = 1.45;
  const CurveFrame frame(hairpin);
  CHECK_FALSE(arcs_disjoint(frame));
  CHECK_THROWS_AS(a_gamma_arc(frame), std::domain_error);
}

TEST_CASE("Monte Carlo area form agrees with the arc formula") {
  const CurveFrame frame(straight_curve());
  const McEstimate est = a_gamma_mc(frame, 200000, 314);
  CHECK(std::fabs(est.point - kDiskLowerBound) < 4.0 * est.std_error);
  CHECK(est.std_error < 5e-3);
}

TEST_CASE("load_curve parses knot lists and rejects malformed input") {
  std::istringstream good("# heading knots\n0 0\n1.0 0.05\n4.0 0.05\n");
  const TurningCurve c = load_curve(good);
  REQUIRE(c.knot_s.size() == 3);
  CHECK(c.phi(0.5) == doctest::Approx(0.025));
  CHECK(c.phi(6.0) == doctest::Approx(0.05));

  std::istringstream unsorted("0 0\n2.0 0.1\n1.0 0.2\n");
  CHECK_THROWS_AS(load_curve(unsorted), std::runtime_error);
  std::istringstream nonzero("0 0.3\n1 0.3\n");
  CHECK_THROWS_AS(load_curve(nonzero), std::runtime_error);
  std::istringstream too_steep("0 0\n1 1.6\n");
  CHECK_THROWS_AS(load_curve(too_steep), std::runtime_error);
}
