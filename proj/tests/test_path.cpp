#include <catch2/catch_amalgamated.hpp>

#include "hexpath/path.hpp"

using namespace hexpath;

TEST_CASE("step increments") {
  CHECK(width_inc(Step::U) == 1);
  CHECK(width_inc(Step::F) == 2);
  CHECK(width_inc(Step::Fb) == 2);
  CHECK(height_inc(Step::U) == 1);
  CHECK(height_inc(Step::Ub) == 1);
  CHECK(height_inc(Step::D) == -1);
  CHECK(height_inc(Step::Db) == -1);
  CHECK(height_inc(Step::F) == 0);
  CHECK(height_inc(Step::Fb) == 0);
}

TEST_CASE("successor automaton") {
  CHECK(raw_successors(Step::U) == std::array<Step, 2>{Step::Ub, Step::F});
  CHECK(raw_successors(Step::Ub) == std::array<Step, 2>{Step::U, Step::Db});
  CHECK(raw_successors(Step::D) == std::array<Step, 2>{Step::U, Step::Db});
  CHECK(raw_successors(Step::Db) == std::array<Step, 2>{Step::D, Step::Fb});
  CHECK(raw_successors(Step::F) == std::array<Step, 2>{Step::D, Step::Fb});
  CHECK(raw_successors(Step::Fb) == std::array<Step, 2>{Step::Ub, Step::F});
  CHECK(step_successors(std::nullopt, 0) == std::vector<Step>{Step::U});
  // quarter-plane filter drops Db at height 0
  CHECK(step_successors(Step::D, 0) == std::vector<Step>{Step::U});
  CHECK(step_successors(Step::D, 1) == std::vector<Step>{Step::U, Step::Db});
}

TEST_CASE("parse and validate") {
  PackingPath p = parse_path("U F D");
  CHECK(p.width() == 4);
  CHECK(p.height() == 0);
  CHECK(p.nbsteps() == 3);
  CHECK(p.ends_on_axis());
  CHECK(parse_path("U,Ub,Db,D").width() == 4);
  CHECK(parse_path("").empty());
  CHECK(parse_path("U  F   D") == p);

  CHECK_THROWS_AS(parse_path("F"), IllegalStart);
  CHECK_THROWS_AS(parse_path("U D"), IllegalTransition);
  CHECK_THROWS_AS(parse_path("U F D Db"), QuarterPlaneViolation);
  CHECK_THROWS_AS(parse_path("U F U"), IllegalTransition);
  CHECK_THROWS_AS(parse_path("U Ub Db Db"), IllegalTransition);
  CHECK_THROWS_AS(parse_path("U X"), UnknownToken);
  CHECK_THROWS_AS(parse_path("u f d"), UnknownToken);
}

TEST_CASE("quarter plane") {
  // Ub Db drops back to 1, then D to 0; a further Db would dip below
  CHECK_NOTHROW(parse_path("U Ub Db D"));
  CHECK_THROWS_AS(PackingPath({Step::U, Step::Db}), IllegalTransition);
  CHECK_THROWS_AS(PackingPath({Step::U, Step::F, Step::D, Step::U, Step::Ub, Step::Db,
                               Step::D, Step::Db}),
                  QuarterPlaneViolation);
}

TEST_CASE("token round trip") {
  const char* toks = "U Ub Db Fb F D";
  PackingPath p = parse_path(toks);
  CHECK(p.to_tokens() == toks);
  CHECK(parse_path(p.to_tokens()) == p);
}

TEST_CASE("inchworm predicate") {
  CHECK(parse_path("U F D").is_inchworm());
  CHECK(parse_path("U Ub U F D Db D").is_inchworm());
  CHECK_FALSE(parse_path("U Ub Db D").is_inchworm());   // contains Ub Db
  CHECK_FALSE(parse_path("U F D U F D").is_inchworm()); // contains D U
  CHECK(PackingPath{}.is_inchworm());
}

TEST_CASE("vertices") {
  auto vs = parse_path("U F D").vertices();
  REQUIRE(vs.size() == 4);
  CHECK(vs[0] == std::pair{0, 0});
  CHECK(vs[1] == std::pair{1, 1});
  CHECK(vs[2] == std::pair{3, 1});
  CHECK(vs[3] == std::pair{4, 0});
}
