#include <catch2/catch_amalgamated.hpp>

#include "hexpath/brute.hpp"
#include "hexpath/counters.hpp"

using namespace hexpath;

TEST_CASE("width-height DP vs brute") {
  CHECK(width_height_table(16) == brute_stat_table(StatPair::WidthHeight, 16));
  StatTable t = width_height_table(8);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(8, 0) == 10);
  CHECK(t.at(5, 1) == 4);
  CHECK(t.row_total(8) == 21);
}

TEST_CASE("steps-height DP vs brute") {
  CHECK(steps_height_table(12) == brute_stat_table(StatPair::StepsHeight, 12));
  StatTable t = steps_height_table(8);
  CHECK(t.at(3, 0) == 1);
  CHECK(t.at(7, 0) == 5);
  CHECK(t.row_total(7) == 47);
}

TEST_CASE("decomposition polys vs brute geometry") {
  for (auto [flavor, pair] :
       {std::pair{AxisFlavor::Area, StatPair::WidthArea},
        std::pair{AxisFlavor::Kiss, StatPair::WidthKiss},
        std::pair{AxisFlavor::InchwormKiss, StatPair::WidthKissInchworm}}) {
    AxisPolyTable dp = decomposition_polys(16, flavor);
    StatTable b = brute_stat_table(pair, 16);
    for (int w = 0; w <= 16; w += 4)
      for (const auto& [j, v] : dp.at(w)) CHECK(v == b.at(w, j));
  }
}

TEST_CASE("counter bound") {
  CHECK_THROWS_AS(width_height_table(kCounterBound + 1), BoundExceeded);
  CHECK_THROWS_AS(decomposition_polys(10, AxisFlavor::Area), BoundExceeded);  // not 0 mod 4
}

TEST_CASE("expected height exact") {
  // width 5: four paths of height 1 and three of height 3 -> hand value
  StatTable t = width_height_table(5);
  Int num = 0, den = 0;
  for (const auto& [nk, c] : t.entries)
    if (nk.first == 5) {
      num += Int(nk.second) * c;
      den += c;
    }
  CHECK(expected_height_exact(5, HeightStat::Width) == Rat(num, den));
  CHECK(expected_height_exact(5, HeightStat::Width) == Rat(15, 7));
}

TEST_CASE("expected height float matches exact at moderate size") {
  for (HeightStat stat : {HeightStat::Width, HeightStat::Steps}) {
    double ex = expected_height_exact(60, stat).convert_to<double>();
    double fl = expected_height_float(60, stat);
    CHECK(std::abs(ex - fl) < 1e-9 * (1 + std::abs(ex)));
  }
}
