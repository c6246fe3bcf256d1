#include <catch2/catch_amalgamated.hpp>

#include "hexpath/checks.hpp"
#include "hexpath/closed_forms.hpp"

using namespace hexpath;

TEST_CASE("kernel roots width") {
  IntSeries r = r_width(20);
  CHECK(r.valuation() == 2);
  CHECK(r.coeff(2) == 1);
  IntSeries s = s_width(20);
  CHECK(s.valuation() == -2);
  CHECK(agree(r * s, IntSeries::poly({1}, 20)));
}

TEST_CASE("axis width series") {
  IntSeries g = S2_x0(26);
  CHECK(g.coeff(0) == 1);
  CHECK(g.coeff(4) == 2);
  CHECK(g.coeff(8) == 10);
  CHECK(g.coeff(12) == 58);
  CHECK(g.coeff(16) == 370);
  CHECK(g.coeff(2) == 0);
  CHECK(axis_width_closed(5) == 2514);
  CHECK(axis_width_closed(6) == 17850);
}

TEST_CASE("width totals series") {
  IntSeries t = S2_x1(12);
  long long expect[] = {1, 1, 1, 3, 3, 7, 7, 21, 21, 53, 53, 159};
  for (long n = 0; n < 12; ++n) CHECK(t.coeff(n) == expect[n]);
}

TEST_CASE("steps series") {
  IntSeries g = S3_x0(16);
  long long axis[] = {1, 0, 0, 1, 1, 1, 3, 5, 7, 14, 26, 43, 79, 148, 264, 483};
  for (long n = 0; n < 16; ++n) {
    CHECK(g.coeff(n) == axis[n]);
    CHECK(axis_steps_closed(n) == axis[n]);
  }
  IntSeries t = S3_x1(12);
  long long tot[] = {1, 1, 2, 4, 7, 13, 25, 47, 89, 171, 328, 630};
  for (long n = 0; n < 12; ++n) CHECK(t.coeff(n) == tot[n]);
}

TEST_CASE("closed coefficient formulas spot values") {
  CHECK(s2_closed(8, 0) == 10);
  CHECK(s2_closed(5, 1) == 4);
  CHECK(s2_closed(0, 0) == 1);
  CHECK(s3_closed(7, 0) == 5);
  CHECK(s3_closed(0, 0) == 1);
  CHECK(schroder_r(0) == 1);
  CHECK(schroder_r(3) == 22);
  CHECK(schroder_r(5) == 394);
  CHECK(kiss_total_closed(4) == 152);
  CHECK(narayana(4, 2) == 6);
  CHECK(inchworm_closed(16, 5) == 6);  // n = 4, k = 2
  CHECK(inchworm_closed(16, 4) == 1);
}

TEST_CASE("printed bivariate gf coefficients") {
  BivarPoly A = kiss_gf(8, 4);
  CHECK(A.coeff(0, 0) == 1);
  CHECK(A.coeff(4, 1) == 2);
  CHECK(A.coeff(8, 2) + A.coeff(8, 3) == 10);
  BivarPoly Ai = inchworm_gf(8, 4);
  CHECK(Ai.coeff(4, 1) == 1);
  CHECK(Ai.coeff(8, 2) + Ai.coeff(8, 3) == 2);
}

TEST_CASE("series identity suite") {
  auto res = check_series_identities();
  INFO(res.detail);
  CHECK(res.ok);
}

TEST_CASE("asymptote formulas evaluate") {
  CHECK(asymptote("axis_width", 10) > 0);
  CHECK(asymptote("exp_height_width", 100) == Catch::Approx(std::sqrt(50 * 3.14159265358979)));
  CHECK_THROWS_AS(asymptote("nope", 1), UnknownName);
}
