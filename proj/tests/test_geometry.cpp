#include <catch2/catch_amalgamated.hpp>

#include "hexpath/checks.hpp"
#include "hexpath/geometry.hpp"

using namespace hexpath;

TEST_CASE("lattice centers") {
  CHECK(is_lattice_center({2, 0}));
  CHECK(is_lattice_center({6, 0}));
  CHECK(is_lattice_center({4, 2}));
  CHECK_FALSE(is_lattice_center({4, 0}));
  CHECK_FALSE(is_lattice_center({2, 1}));
  CHECK_FALSE(is_lattice_center({0, 2}));   // x >= 2
  CHECK_FALSE(is_lattice_center({2, -2}));
}

TEST_CASE("circles below simple paths") {
  CHECK(circles_below(parse_path("U F D")) == std::set<CircleCenter>{{2, 0}});
  CHECK(circles_below(parse_path("U Ub Db D")) == std::set<CircleCenter>{{2, 0}});
  CHECK(circles_below(parse_path("U F Fb F D")) == std::set<CircleCenter>{{2, 0}, {6, 0}});
  CHECK(circles_below(parse_path("U Ub U F D Db D")) ==
        std::set<CircleCenter>{{2, 0}, {4, 2}, {6, 0}});
  CHECK(circles_below(PackingPath{}).empty());
  CHECK_THROWS_AS(circles_below(parse_path("U F Fb")), NotAxisPath);
}

TEST_CASE("reference path anchors") {
  PackingPath p = parse_path(kReferencePathTokens);
  CHECK(p.width() == 28);
  CHECK(area_of(p) == 9);
  CHECK(kissing_of(p) == 8);
  CHECK(circles_below(p) ==
        std::set<CircleCenter>{{2, 0}, {6, 0}, {10, 0}, {14, 0}, {18, 0}, {22, 0},
                               {26, 0}, {20, 2}, {24, 2}});
  auto res = check_geometry_anchors();
  CHECK(res.ok);
}

TEST_CASE("kiss bounded by area") {
  enumerate_paths({16, std::nullopt}, true, [](const PackingPath& p) {
    CHECK(kissing_of(p) <= area_of(p));
  });
}

TEST_CASE("first touch order") {
  PackingPath p = parse_path("U Ub U F D Db D");
  auto seq = first_touch_order(p);
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == CircleCenter{2, 0});
  CHECK(seq[1] == CircleCenter{4, 2});
  CHECK(seq[2] == CircleCenter{6, 0});
  CHECK_THROWS_AS(first_touch_order(parse_path("U Ub Db D")), NotInchworm);
}

TEST_CASE("enumeration counts") {
  int axis8 = 0, all8 = 0;
  enumerate_paths({8, std::nullopt}, true, [&](const PackingPath& p) {
    if (p.width() == 8) ++axis8;
  });
  enumerate_paths({8, std::nullopt}, false, [&](const PackingPath& p) {
    if (p.width() == 8) ++all8;
  });
  CHECK(axis8 == 10);
  CHECK(all8 == 21);
  CHECK_THROWS_AS(enumerate_paths({100, std::nullopt}, false, [](const PackingPath&) {}),
                  LimitTooLarge);
  CHECK_THROWS_AS(enumerate_paths({std::nullopt, std::nullopt}, false, [](const PackingPath&) {}),
                  LimitTooLarge);
}
