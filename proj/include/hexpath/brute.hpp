#pragma once
// Brute-force statistic tables: full enumeration + per-path geometry.
// The independent oracle for everything the DP and closed forms produce.

#include <string>

#include "hexpath/geometry.hpp"
#include "hexpath/stat_table.hpp"

namespace hexpath {

enum class StatPair { WidthHeight, StepsHeight, WidthArea, WidthKiss, WidthKissInchworm };

inline StatTable brute_stat_table(StatPair pair, int limit) {
  StatTable t;
  EnumLimit lim;
  bool axis = false;
  switch (pair) {
    case StatPair::WidthHeight:
      t.statistic = "width"; t.by = "height"; lim.max_width = limit; break;
    case StatPair::StepsHeight:
      t.statistic = "steps"; t.by = "height"; lim.max_steps = limit; break;
    case StatPair::WidthArea:
      t.statistic = "width"; t.by = "area"; lim.max_width = limit; axis = true; break;
    case StatPair::WidthKiss:
    case StatPair::WidthKissInchworm:
      t.statistic = "width"; t.by = "kiss"; lim.max_width = limit; axis = true; break;
  }
  t.bound = limit;
  enumerate_paths(lim, axis, [&](const PackingPath& p) {
    switch (pair) {
      case StatPair::WidthHeight:
        t.add(p.width(), p.height(), 1);
        break;
      case StatPair::StepsHeight:
        t.add(p.nbsteps(), p.height(), 1);
        break;
      case StatPair::WidthArea:
        t.add(p.width(), area_of(p), 1);
        break;
      case StatPair::WidthKiss:
        t.add(p.width(), kissing_of(p), 1);
        break;
      case StatPair::WidthKissInchworm:
        if (p.is_inchworm()) t.add(p.width(), kissing_of(p), 1);
        break;
    }
  });
  return t;
}

}  // namespace hexpath
