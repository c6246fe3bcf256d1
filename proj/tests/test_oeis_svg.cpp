#include <catch2/catch_amalgamated.hpp>

#include "hexpath/checks.hpp"
#include "hexpath/oeis.hpp"
#include "hexpath/stat_table.hpp"
#include "hexpath/svg.hpp"

using namespace hexpath;

TEST_CASE("embedded snapshots") {
  for (const char* id :
       {"A086871", "A368773", "A346503", "A004148", "A239204", "A001263"}) {
    auto s = oeis_lookup(id);
    REQUIRE(s.has_value());
    CHECK(s->terms.size() >= 11);
    CHECK(s->source == "embedded");
  }
  CHECK_FALSE(oeis_lookup("A000001").has_value());
}

TEST_CASE("bfile parsing") {
  auto t = parse_bfile("# comment\n1 1\n2 2\n3 10\n\n4 58\n");
  REQUIRE(t.size() == 4);
  CHECK(t[2] == 10);
  CHECK(t[3] == 58);
}

TEST_CASE("snapshot comparison") {
  std::vector<Int> a = {1, 2, 10};
  auto snap = oeis_lookup("A086871");
  CHECK(oeis_compare(a, snap->terms, 3) == OeisResult::Match);
  a[2] = 11;
  CHECK(oeis_compare(a, snap->terms, 3) == OeisResult::Mismatch);
  CHECK(oeis_compare({}, snap->terms, 3) == OeisResult::Unknown);
}

TEST_CASE("stat table serialization") {
  StatTable t{"width", "height", {}, 4};
  t.add(0, 0, 1);
  t.add(4, 0, 2);
  CHECK(t.to_json() ==
        "{\"statistic\":\"width\",\"by\":\"height\",\"entries\":[[0,0,\"1\"],[4,0,\"2\"]]}");
  CHECK(t.to_csv() == "width,height,count\n0,0,1\n4,0,2\n");
}

TEST_CASE("svg rendering") {
  std::string one = render_svg(parse_path("U F D"));
  CHECK(one.find("<circle") != std::string::npos);
  CHECK(std::count(one.begin(), one.end(), '\n') > 4);
  // three arcs, one circle
  std::size_t arcs = 0, pos = 0;
  while ((pos = one.find("<path", pos)) != std::string::npos) { ++arcs; ++pos; }
  CHECK(arcs == 3);
  CHECK(one == render_svg(parse_path("U F D")));  // deterministic bytes

  std::string empty = render_svg(PackingPath{});
  CHECK(empty.find("<path") == std::string::npos);
  CHECK(empty.find("<line") != std::string::npos);

  std::string fig = render_svg(parse_path(kReferencePathTokens));
  std::size_t circles = 0;
  pos = 0;
  while ((pos = fig.find("<circle", pos)) != std::string::npos) { ++circles; ++pos; }
  CHECK(circles == 9);
}
