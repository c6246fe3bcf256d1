#pragma once
// Exact DP counters: transfer DP over the automaton for (width,height) and
// (steps,height); first-return decomposition DP for area, kiss, and the
// inchworm variant; exact and floating expected height.

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "hexpath/path.hpp"
#include "hexpath/stat_table.hpp"

namespace hexpath {

struct BoundExceeded : std::runtime_error {
  BoundExceeded() : std::runtime_error("requested size exceeds the configured bound") {}
};

inline constexpr int kCounterBound = 400;

namespace detail {

// dp layer keyed by (height, last-step); advanced one width/step unit at a time
template <typename Advance>
StatTable transfer_table(int N, const char* stat, Advance advance) {
  StatTable t;
  t.statistic = stat;
  t.by = "height";
  t.bound = N;
  t.add(0, 0, 1);
  // state: cur[n] = map (height, last) -> count at primary-statistic value n
  std::vector<std::map<std::pair<int, int>, Int>> layers(N + 1);
  layers[0][{0, -1}] = 1;  // last = -1 means start
  for (int n = 0; n <= N; ++n) {
    for (const auto& [hl, cnt] : layers[n]) {
      auto [h, last] = hl;
      for (Step s : kAllSteps) {
        if (last < 0) {
          if (s != Step::U) continue;
        } else {
          const auto& succ = raw_successors(static_cast<Step>(last));
          if (s != succ[0] && s != succ[1]) continue;
        }
        int nh = h + height_inc(s);
        if (nh < 0) continue;
        int nn = n + advance(s);
        if (nn > N) continue;
        layers[nn][{nh, static_cast<int>(s)}] += cnt;
        t.add(nn, nh, cnt);
      }
    }
  }
  return t;
}

}  // namespace detail

inline StatTable width_height_table(int N) {
  if (N > kCounterBound) throw BoundExceeded();
  return detail::transfer_table(N, "width", [](Step s) { return width_inc(s); });
}

inline StatTable steps_height_table(int N) {
  if (N > kCounterBound) throw BoundExceeded();
  return detail::transfer_table(N, "steps", [](Step) { return 1; });
}

using YPoly = std::map<int, Int>;  // y-exponent -> count

inline YPoly ypoly_mul(const YPoly& a, const YPoly& b) {
  YPoly r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) r[i + j] += x * y;
  return r;
}

inline YPoly ypoly_shift(const YPoly& a, int k) {
  YPoly r;
  for (const auto& [i, v] : a) r[i + k] = v;
  return r;
}

inline void ypoly_acc(YPoly& a, const YPoly& b) {
  for (const auto& [i, v] : b) a[i] += v;
}

enum class AxisFlavor { Area, Kiss, InchwormKiss };

struct AxisPolyTable {
  AxisFlavor flavor;
  std::map<int, YPoly> by_width;  // width (multiple of 4) -> polynomial in y

  const YPoly& at(int w) const {
    static const YPoly empty;
    auto it = by_width.find(w);
    return it == by_width.end() ? empty : it->second;
  }
};

// First-return decomposition on the A class (axis paths) and B class
// (elevated paths ending with F or Db on their baseline). B widths are
// 2 mod 4; A widths 0 mod 4. Area bookkeeping adds the (2+width_B)/4 circles
// under the elevated factor at the A level; kiss bookkeeping adds +1 or +2
// per B form exactly as the functional equations dictate.
inline AxisPolyTable decomposition_polys(int max_width, AxisFlavor flavor) {
  if (max_width > kCounterBound || max_width % 4 != 0) throw BoundExceeded();
  bool area = flavor == AxisFlavor::Area;
  bool inch = flavor == AxisFlavor::InchwormKiss;
  std::map<int, YPoly> A, B;
  A[0] = {{0, 1}};
  for (int w = 2; w <= max_width; w += 2) {
    YPoly b;
    if (area) {
      if (w == 2) b[0] += 1;                                  // form i: F
      if (B.count(w - 4)) ypoly_acc(b, B[w - 4]);             // form ii: F Fb R'
      if (A.count(w - 2)) ypoly_acc(b, A[w - 2]);             // form iii: Ub Q Db
      for (int q = 0; q <= w - 4; q += 4)                     // form iv: Ub Q Db Fb R'
        if (A.count(q) && B.count(w - 4 - q))
          ypoly_acc(b, ypoly_mul(A[q], B[w - 4 - q]));
    } else {
      if (w == 2) b[1] += 1;                                  // form i
      if (B.count(w - 4)) ypoly_acc(b, ypoly_shift(B[w - 4], 1));  // form ii
      if (!inch) {
        if (w == 2) b[1] += 1;                                // form iii, Q empty
        if (B.count(w - 4)) ypoly_acc(b, ypoly_shift(B[w - 4], 1));  // form iv, Q empty
      }
      if (A.count(w - 2) && w - 2 >= 4)                       // form iii, Q nonempty
        ypoly_acc(b, ypoly_shift(A[w - 2], 2));
      for (int q = 4; q <= w - 4; q += 4)                     // form iv, Q nonempty
        if (A.count(q) && B.count(w - 4 - q))
          ypoly_acc(b, ypoly_shift(ypoly_mul(A[q], B[w - 4 - q]), 2));
    }
    B[w] = std::move(b);
    if (w % 4 == 0) {
      YPoly a;
      if (inch) {
        // DU forbidden: an inchworm is exactly U B' D, no trailing factor
        if (B.count(w - 2)) a = B[w - 2];
      } else {
        for (int q = 2; q <= w - 2; q += 4) {
          int r = w - 2 - q;
          if (!B.count(q) || !A.count(r)) continue;
          if (area) {
            // circles under the U..D wrapper: (2 + width_B)/4, integral since q == 2 mod 4
            ypoly_acc(a, ypoly_mul(ypoly_shift(B[q], (2 + q) / 4), A[r]));
          } else {
            ypoly_acc(a, ypoly_mul(B[q], A[r]));
          }
        }
      }
      A[w] = std::move(a);
    }
  }
  AxisPolyTable t{flavor, {}};
  for (auto& [w, p] : A) t.by_width[w] = std::move(p);
  return t;
}

inline AxisPolyTable area_polys(int max_width) {
  return decomposition_polys(max_width, AxisFlavor::Area);
}
inline AxisPolyTable kiss_polys(int max_width) {
  return decomposition_polys(max_width, AxisFlavor::Kiss);
}
inline AxisPolyTable inchworm_polys(int max_width) {
  return decomposition_polys(max_width, AxisFlavor::InchwormKiss);
}

enum class HeightStat { Width, Steps };

inline Rat expected_height_exact(int n, HeightStat stat) {
  if (n > kCounterBound) throw BoundExceeded();
  StatTable t = stat == HeightStat::Width ? width_height_table(n) : steps_height_table(n);
  Int num = 0, den = 0;
  for (const auto& [nk, c] : t.entries) {
    if (nk.first != n) continue;
    num += Int(nk.second) * c;
    den += c;
  }
  if (den == 0) throw BoundExceeded();
  return Rat(num, den);
}

// normalized floating DP; renormalizes each layer so counts stay in range
inline double expected_height_float(int n, HeightStat stat) {
  if (n > 100000) throw BoundExceeded();
  bool by_width = stat == HeightStat::Width;
  // state (height, last) -> weight; heights bounded by n
  std::map<std::pair<int, int>, double> cur;
  cur[{0, -1}] = 1.0;
  std::map<std::pair<int, int>, double> carry;  // arrivals one unit later (width 2 steps)
  for (int layer = 0; layer < n; ++layer) {
    std::map<std::pair<int, int>, double> nxt = std::move(carry);
    carry.clear();
    for (const auto& [hl, wgt] : cur) {
      auto [h, last] = hl;
      for (Step s : kAllSteps) {
        if (last < 0) {
          if (s != Step::U) continue;
        } else {
          const auto& succ = raw_successors(static_cast<Step>(last));
          if (s != succ[0] && s != succ[1]) continue;
        }
        int nh = h + height_inc(s);
        if (nh < 0) continue;
        int adv = by_width ? width_inc(s) : 1;
        auto& slot = (adv == 1) ? nxt[{nh, static_cast<int>(s)}]
                                : carry[{nh, static_cast<int>(s)}];
        slot += wgt;
      }
    }
    double mass = 0;
    for (const auto& [hl, wgt] : nxt) mass += wgt;
    if (mass > 0)
      for (auto& [hl, wgt] : nxt) wgt /= mass;
    for (auto& [hl, wgt] : carry) wgt /= mass > 0 ? mass : 1.0;
    cur = std::move(nxt);
  }
  double num = 0, den = 0;
  for (const auto& [hl, wgt] : cur) {
    num += hl.first * wgt;
    den += wgt;
  }
  return num / den;
}

}  // namespace hexpath
