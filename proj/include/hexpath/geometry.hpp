#pragma once
// Exact integer geometry on the circle lattice: circles below an axis path,
// touched circles, DFS enumeration, and brute-force statistic tables.

#include <cassert>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hexpath/path.hpp"

namespace hexpath {

struct CircleCenter {
  int x = 0;
  int h = 0;  // real ordinate is h*sqrt(3); lattice requires h even, x+h == 2 mod 4
  auto operator<=>(const CircleCenter&) const = default;
};

inline bool is_lattice_center(CircleCenter c) {
  return c.h >= 0 && c.h % 2 == 0 && c.x >= 2 && (c.x + c.h) % 4 == 2;
}

struct NotAxisPath : PathError {
  NotAxisPath() : PathError("path does not end on the x-axis") {}
};
struct NotInchworm : PathError {
  NotInchworm() : PathError("path is not an inchworm path") {}
};
struct LimitTooLarge : PathError {
  LimitTooLarge() : PathError("enumeration limit exceeds the safety bound") {}
};

// All lattice centers strictly inside the region bounded by the path's chords
// and the closing row at h = -1. Even-odd ray casting, half-open [hmin, hmax)
// edge rule; everything stays in integers (slopes are 0 or +-1, F-chords are
// horizontal and never cross a horizontal ray).
inline std::set<CircleCenter> circles_below(const PackingPath& p) {
  if (!p.ends_on_axis()) throw NotAxisPath();
  std::set<CircleCenter> out;
  if (p.empty()) return out;
  auto vs = p.vertices();
  const int n = p.width();
  // closed polygon: path vertices then (n,-1), (0,-1) back to (0,0)
  vs.emplace_back(n, -1);
  vs.emplace_back(0, -1);
  vs.emplace_back(0, 0);
  int hmax = 0;
  for (auto [x, h] : vs) hmax = h > hmax ? h : hmax;
  for (int h = 0; h <= hmax; h += 2) {
    for (int x = (h % 4 == 0) ? 2 : 4; x < n; x += 4) {
      // ray to the left at ordinate h; count crossings with edges
      int crossings = 0;
      for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        auto [x1, h1] = vs[i];
        auto [x2, h2] = vs[i + 1];
        if (h1 == h2) continue;  // horizontal chord, no crossing with [hmin,hmax)
        int lo = h1 < h2 ? h1 : h2, hi = h1 + h2 - lo;
        if (h < lo || h >= hi) continue;
        // intersection abscissa of the segment with ordinate h; slope +-1 or vertical
        // x_at = x1 + (x2-x1)*(h-h1)/(h2-h1), exact since |h2-h1| divides evenly
        int num = (x2 - x1) * (h - h1);
        int den = h2 - h1;
        assert(num % den == 0);
        int xat = x1 + num / den;
        assert(xat != x);  // centers never lie on an edge
        if (xat < x) ++crossings;
      }
      if (crossings % 2 == 1) out.insert({x, h});
    }
  }
  return out;
}

inline int area_of(const PackingPath& p) {
  return static_cast<int>(circles_below(p).size());
}

// Centers at vertex-offset distance: a vertex v lies on circle c iff
// v - c is one of the six tangency offsets.
inline std::set<CircleCenter> touched_circles(const PackingPath& p) {
  static const std::pair<int, int> offs[6] = {{2, 0},  {-2, 0}, {1, 1},
                                              {1, -1}, {-1, 1}, {-1, -1}};
  std::set<CircleCenter> out;
  for (auto [vx, vh] : p.vertices()) {
    for (auto [dx, dh] : offs) {
      CircleCenter c{vx - dx, vh - dh};
      if (is_lattice_center(c)) out.insert(c);
    }
  }
  return out;
}

inline int kissing_of(const PackingPath& p) {
  auto below = circles_below(p);  // throws NotAxisPath
  int k = 0;
  for (const auto& c : touched_circles(p))
    if (below.count(c)) ++k;
  return k;
}

// Kissed circles in order of first touching vertex (inchworm chains only).
inline std::vector<CircleCenter> first_touch_order(const PackingPath& p) {
  if (!p.is_inchworm()) throw NotInchworm();
  static const std::pair<int, int> offs[6] = {{2, 0},  {-2, 0}, {1, 1},
                                              {1, -1}, {-1, 1}, {-1, -1}};
  auto below = circles_below(p);
  std::vector<CircleCenter> seq;
  std::set<CircleCenter> seen;
  for (auto [vx, vh] : p.vertices()) {
    for (auto [dx, dh] : offs) {
      CircleCenter c{vx - dx, vh - dh};
      if (below.count(c) && seen.insert(c).second) seq.push_back(c);
    }
  }
  return seq;
}

struct EnumLimit {
  std::optional<int> max_width;
  std::optional<int> max_steps;
};

inline constexpr int kDefaultWidthBound = 32;
inline constexpr int kDefaultStepsBound = 20;

// DFS over the automaton in the fixed order U < F < D < Ub < Fb < Db.
// Visits every valid path within the limit exactly once (including the
// empty path); axis_only filters the visit callback, not the recursion.
inline void enumerate_paths(EnumLimit limit, bool axis_only,
                            const std::function<void(const PackingPath&)>& visit,
                            int width_bound = kDefaultWidthBound,
                            int steps_bound = kDefaultStepsBound) {
  if (limit.max_width && *limit.max_width > width_bound) throw LimitTooLarge();
  if (limit.max_steps && *limit.max_steps > steps_bound) throw LimitTooLarge();
  if (!limit.max_width && !limit.max_steps) throw LimitTooLarge();
  static const Step order[6] = {Step::U,  Step::F,  Step::D,
                                Step::Ub, Step::Fb, Step::Db};
  std::vector<Step> cur;
  int w = 0, h = 0;
  auto rec = [&](auto&& self) -> void {
    bool axis = h == 0 && (cur.empty() || cur.back() == Step::D);
    if (!axis_only || axis) {
      PackingPath p(cur);
      visit(p);
    }
    for (Step s : order) {
      if (!cur.empty()) {
        const auto& succ = raw_successors(cur.back());
        if (s != succ[0] && s != succ[1]) continue;
      } else if (s != Step::U) {
        continue;
      }
      if (h + height_inc(s) < 0) continue;
      if (limit.max_width && w + width_inc(s) > *limit.max_width) continue;
      if (limit.max_steps && static_cast<int>(cur.size()) + 1 > *limit.max_steps)
        continue;
      cur.push_back(s);
      w += width_inc(s);
      h += height_inc(s);
      self(self);
      h -= height_inc(cur.back());
      w -= width_inc(cur.back());
      cur.pop_back();
    }
  };
  rec(rec);
}

}  // namespace hexpath
