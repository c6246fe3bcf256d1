// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. The slow asymptotic suite runs unless HEXPATH_SKIP_SLOW is set.

#include <cstdlib>
#include <iostream>

#include "hexpath/checks.hpp"

int main() {
  using namespace hexpath;
  bool ok = true;
  int idx = 0;
  auto report = [&](const CheckResult& r) {
    ++idx;
    std::cout << (r.ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << r.name;
    if (!r.ok) std::cout << "  [" << r.detail << "]";
    std::cout << std::endl;
    ok = ok && r.ok;
  };
  report(check_width_height_agreement());
  report(check_axis_width_counts());
  report(check_width_totals());
  report(check_steps_statistic());
  report(check_area());
  report(check_kissing());
  report(check_inchworm());
  report(check_bijections());
  report(check_riordan());
  if (std::getenv("HEXPATH_SKIP_SLOW")) {
    ++idx;
    std::cout << "SKIP  criterion " << idx << ": asymptotic regimes" << std::endl;
  } else {
    report(check_asymptotics());
  }
  report(check_geometry_anchors());
  return ok ? 0 : 1;
}
