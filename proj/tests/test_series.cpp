#include <catch2/catch_amalgamated.hpp>

#include "hexpath/series.hpp"
#include "hexpath/upoly.hpp"

using namespace hexpath;

TEST_CASE("series basics") {
  IntSeries a = IntSeries::poly({1, 2, 3}, 10);
  CHECK(a.coeff(0) == 1);
  CHECK(a.coeff(5) == 0);
  CHECK(a.order() == 10);
  CHECK(a.valuation() == 0);
  IntSeries m = IntSeries::monomial(3, 10, Rat(5));
  CHECK(m.valuation() == 3);
  CHECK(m.coeff(3) == 5);
  CHECK((a + m).coeff(3) == 5);
  CHECK((a - a).is_zero());
}

TEST_CASE("multiplication truncation order") {
  // orders combine as min(ord_a + val_b, ord_b + val_a)
  IntSeries a = IntSeries::poly({1, 1}, 5);
  IntSeries b = IntSeries::monomial(2, 8);
  IntSeries p = a * b;
  CHECK(p.valuation() == 2);
  CHECK(p.order() == 7);
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(3) == 1);
}

TEST_CASE("division round trip") {
  IntSeries a = IntSeries::poly({1, -3, 2, 7}, 20);
  IntSeries b = IntSeries::poly({2, 1, -1}, 20);
  CHECK(agree((a / b) * b, a));
  CHECK(agree(a * a.inverse(), IntSeries::poly({1}, 20)));
  CHECK_THROWS_AS(IntSeries(10).inverse(), DivisionByZeroSeries);
}

TEST_CASE("laurent inverse") {
  IntSeries xm = IntSeries::monomial(3, 10);
  IntSeries inv = xm.inverse();
  CHECK(inv.valuation() == -3);
  CHECK(inv.coeff(-3) == 1);
  CHECK(agree(xm * inv, IntSeries::poly({1}, 7)));
}

TEST_CASE("sqrt squares back") {
  IntSeries a = IntSeries::poly({1, -10, 9}, 24);
  IntSeries s = a.sqrt();
  CHECK(agree(s * s, a));
  CHECK_THROWS_AS(IntSeries::poly({2, 1}, 5).sqrt(), NonUnitConstantTerm);
  CHECK_THROWS_AS(IntSeries::monomial(1, 5).sqrt(), OddValuation);
}

TEST_CASE("compose and reversion") {
  IntSeries f = IntSeries::poly({0, 1, -1}, 16);  // x - x^2
  IntSeries g = f.reversion();
  IntSeries id = f.compose(g);
  CHECK(agree(id, IntSeries::monomial(1, 16)));
  // reversion of x - x^2 is the Catalan GF times x
  CHECK(g.coeff(1) == 1);
  CHECK(g.coeff(2) == 1);
  CHECK(g.coeff(3) == 2);
  CHECK(g.coeff(4) == 5);
  CHECK(g.coeff(5) == 14);
}

TEST_CASE("integer coefficient extraction") {
  IntSeries h = IntSeries::poly({1, 1}, 6).scale(Rat(1, 2));
  CHECK_THROWS_AS(h.coeff_int(0), NonIntegerCoefficient);
  CHECK(IntSeries::poly({4, 7}, 6).coeff_int(1) == 7);
}

TEST_CASE("bivariate polynomial inverse") {
  BivarPoly d = BivarPoly::one(8, 4);
  d.add_term(4, 1, -3);
  BivarPoly i = d.inverse();
  CHECK(i.coeff(0, 0) == 1);
  CHECK(i.coeff(4, 1) == 3);
  CHECK(i.coeff(8, 2) == 9);
  CHECK(d * i == BivarPoly::one(8, 4));
}

TEST_CASE("continued fraction depth") {
  BivarPoly shallow = area_cf(16, 6);
  int depth = area_cf_sufficient_depth(16, 6) + 4;
  BivarPoly deep = cf_eval(area_cf_levels(depth, 16, 6), depth, 16, 6);
  CHECK(shallow == deep);
  CHECK(shallow.coeff(4, 1) == 2);
  CHECK(shallow.coeff(8, 2) == 8);  // every area-2 path has width 8
  CHECK_THROWS_AS(cf_eval(area_cf_levels(2, 16, 6), 5, 16, 6), InsufficientDepth);
}
