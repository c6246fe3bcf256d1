#pragma once
// Exact count tables indexed by (primary statistic, secondary statistic).

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "hexpath/bigint.hpp"

namespace hexpath {

struct StatTable {
  std::string statistic;  // primary: "width" or "steps"
  std::string by;         // secondary: "height", "area", "kiss"
  std::map<std::pair<int, int>, Int> entries;
  int bound = 0;

  Int at(int n, int k) const {
    auto it = entries.find({n, k});
    return it == entries.end() ? Int(0) : it->second;
  }

  void add(int n, int k, const Int& c) {
    if (c != 0) entries[{n, k}] += c;
  }

  Int row_total(int n) const {
    Int t = 0;
    for (const auto& [nk, c] : entries)
      if (nk.first == n) t += c;
    return t;
  }

  // {"statistic": .., "by": .., "entries": [[n, k, "count"], ...]}
  std::string to_json() const {
    std::ostringstream os;
    os << "{\"statistic\":\"" << statistic << "\",\"by\":\"" << by
       << "\",\"entries\":[";
    bool first = true;
    for (const auto& [nk, c] : entries) {
      if (!first) os << ',';
      first = false;
      os << '[' << nk.first << ',' << nk.second << ",\"" << c.str() << "\"]";
    }
    os << "]}";
    return os.str();
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << statistic << ',' << by << ",count\n";
    for (const auto& [nk, c] : entries)
      os << nk.first << ',' << nk.second << ',' << c.str() << '\n';
    return os.str();
  }

  friend bool operator==(const StatTable& a, const StatTable& b) {
    return a.entries == b.entries;
  }
};

}  // namespace hexpath
