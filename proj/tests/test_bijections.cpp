#include <catch2/catch_amalgamated.hpp>

#include "hexpath/bijections.hpp"

using namespace hexpath;

TEST_CASE("skew Dyck base cases") {
  CHECK(to_skew_dyck(parse_path("U F D")).str() == "u d");
  CHECK(to_skew_dyck(parse_path("U Ub Db D")).str() == "u d2");
  CHECK(to_skew_dyck(PackingPath{}).toks.empty());
  CHECK_THROWS_AS(to_skew_dyck(parse_path("U F Fb")), NotAxisPath);
}

TEST_CASE("skew Dyck validity") {
  ColoredSkewDyckPath ok{{SkewTok::u, SkewTok::u, SkewTok::d, SkewTok::l}};
  CHECK(ok.valid());
  ColoredSkewDyckPath ul{{SkewTok::u, SkewTok::l}};
  CHECK_FALSE(ul.valid());  // self-avoidance forbids u then l
  ColoredSkewDyckPath lu{{SkewTok::u, SkewTok::u, SkewTok::d, SkewTok::l, SkewTok::u, SkewTok::d}};
  CHECK_FALSE(lu.valid());  // and l then u
  ColoredSkewDyckPath neg{{SkewTok::d}};
  CHECK_FALSE(neg.valid());
}

TEST_CASE("skew Dyck enumeration counts") {
  CHECK(enumerate_skew_dyck(0).size() == 1);
  CHECK(enumerate_skew_dyck(1).size() == 2);
  CHECK(enumerate_skew_dyck(2).size() == 10);
  CHECK(enumerate_skew_dyck(3).size() == 58);
}

TEST_CASE("qmotzkin base cases") {
  CHECK(to_qmotzkin(parse_path("U F D")).str() == "u d f");
  CHECK(to_qmotzkin(parse_path("U Ub Db D")).str() == "u d f f");
  CHECK_THROWS_AS(to_qmotzkin(parse_path("U F Fb")), NotAxisPath);
}

TEST_CASE("qmotzkin enumeration counts") {
  long long counts[] = {1, 0, 0, 1, 1, 1, 3, 5, 7, 14};
  for (int n = 0; n < 10; ++n)
    CHECK(enumerate_qmotzkin(n).size() == static_cast<std::size_t>(counts[n]));
}

TEST_CASE("circle sequence maps") {
  CircleSequence c = path_to_circle_sequence(parse_path("U F D"));
  REQUIRE(c.size() == 1);
  CHECK(inchworm_to_dyck(c).str() == "UD");
  CHECK(inchworm_to_peakless(c).str() == "F");

  CircleSequence c3 = path_to_circle_sequence(parse_path("U Ub U F D Db D"));
  DyckPath d = inchworm_to_dyck(c3);
  CHECK(d.valid());
  CHECK(d.ups.size() == 4);
  CHECK(d.peaks() == 2 * 2 - 3);
  PeaklessMotzkinPath m = inchworm_to_peakless(c3);
  CHECK(m.valid());
  CHECK(m.toks.size() == c3.size());
  CHECK_THROWS_AS(path_to_circle_sequence(parse_path("U Ub Db D")), NotInchworm);
}

TEST_CASE("peakless validity") {
  PeaklessMotzkinPath peak{{MotzTok::U, MotzTok::D}};
  CHECK_FALSE(peak.valid());
  PeaklessMotzkinPath ok{{MotzTok::U, MotzTok::F, MotzTok::D}};
  CHECK(ok.valid());
}
