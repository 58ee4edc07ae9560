#include "escape/disk.hpp"

#include <cmath>

namespace escape {

namespace {
constexpr double kTinyRadius = 1e-14;
}

const char* disk_case_name(DiskCase c) {
  return c == DiskCase::Case1Prime ? "Case1'" : "Case2'";
}

double disk_phi(double x, double r) {
  if (x < std::fabs(r - 1.0) - 1e-12)
    throw std::domain_error("disk_phi: needs x >= |r - 1|");
  if (x <= kTinyRadius || r <= kTinyRadius)
    throw std::domain_error("disk_phi: needs x > 0 and r > 0");
  return safe_acos((1.0 - x * x - r * r) / (2.0 * x * r));
}

double disk_psi(double x, double r) {
  if (r > x) throw std::domain_error("disk_psi: needs x >= r");
  if (x <= kTinyRadius) throw std::domain_error("disk_psi: needs x > 0");
  return safe_acos(-r / x);
}

DiskCase disk_classify(const DiskState& st, const DiskStrategy& strat) {
  const double x = st.x, r = strat.r;
  if (x <= kTinyRadius)  // center start: q = 1 exactly
    return r >= 1.0 ? DiskCase::Case1Prime : DiskCase::Case2Prime;
  if (r <= kTinyRadius) return DiskCase::Case2Prime;
  if (x < r - 1.0) return DiskCase::Case1Prime;
  if (x >= std::fabs(r - 1.0)) {
    const double phi = disk_phi(x, r);
    if (st.theta >= -phi && st.theta <= phi) return DiskCase::Case1Prime;
  }
  return DiskCase::Case2Prime;
}

DiskGeometry disk_geometry(const DiskState& st, const DiskStrategy& strat) {
  const double x = st.x, th = st.theta, r = strat.r, a = strat.alpha;
  DiskGeometry g{};
  g.label = disk_classify(st, strat);
  g.q = -x * std::cos(th) + safe_sqrt(1.0 - x * x * std::sin(th) * std::sin(th));
  g.y = std::sqrt(x * x + r * r + 2.0 * x * r * std::cos(th));
  if (g.label == DiskCase::Case1Prime) return g;

  if (g.y <= kTinyRadius) {
    g.omega = 0.0;  // back at the center; every direction is equivalent
  } else {
    // Stable form of the two-branch rule: sin(omega) = x sin(th) / y and
    // cos(omega) = (x cos(th) + r) / y, whose sign flips exactly at the
    // branch threshold psi = arccos(-r / x). The asin form overflows [-1, 1]
    // by rounding near tangency (y -> x |sin th|).
    g.omega = std::atan2(x * std::sin(th), x * std::cos(th) + r);
  }
  const double sn = g.y * std::sin(a + g.omega);
  g.s = g.y * std::cos(a + g.omega) + safe_sqrt(1.0 - sn * sn);
  return g;
}

double disk_path_length(const DiskState& st, const DiskStrategy& strat) {
  const DiskGeometry g = disk_geometry(st, strat);
  return g.label == DiskCase::Case1Prime ? g.q : strat.r + g.s;
}

}  // namespace escape
