#pragma once
// Cross-check suites: every counting route is compared against every other
// independent route at desk scale. Used by the CLI and the acceptance tests.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hexpath/bijections.hpp"
#include "hexpath/brute.hpp"
#include "hexpath/closed_forms.hpp"
#include "hexpath/counters.hpp"
#include "hexpath/geometry.hpp"
#include "hexpath/oeis.hpp"
#include "hexpath/riordan.hpp"
#include "hexpath/upoly.hpp"

namespace hexpath {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample, empty when ok
};

namespace detail {

struct Checker {
  CheckResult res;
  explicit Checker(std::string name) { res.name = std::move(name); }

  template <typename A, typename B>
  void eq(const A& a, const B& b, const std::string& what) {
    if (!res.ok) return;
    if (!(a == b)) {
      res.ok = false;
      std::ostringstream os;
      os << what << ": " << a << " != " << b;
      res.detail = os.str();
    }
  }

  void require(bool cond, const std::string& what) {
    if (res.ok && !cond) {
      res.ok = false;
      res.detail = what;
    }
  }
};

// compare a DP table against a UPoly series, both ways, over n < order, k <= max_u
inline void table_vs_upoly(Checker& c, const StatTable& t, const UPoly& S, int nmax,
                           int max_u, const std::string& what) {
  for (int k = 0; k <= max_u && c.res.ok; ++k) {
    IntSeries s = S.coeff(k);
    long top = std::min<long>(nmax + 1, s.order());
    for (long n = 0; n < top; ++n)
      c.eq(s.coeff(n), Rat(t.at(static_cast<int>(n), k)),
           what + " at (" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  for (const auto& [nk, cnt] : t.entries)
    if (nk.first <= nmax)
      c.require(nk.second <= max_u, what + ": table has secondary index beyond series");
}

inline void axis_poly_vs_brute(Checker& c, const AxisPolyTable& dp, StatPair pair,
                               int max_width, const std::string& what) {
  StatTable b = brute_stat_table(pair, max_width);
  for (int w = 0; w <= max_width; w += 4) {
    const YPoly& p = dp.at(w);
    std::set<int> ks;
    for (const auto& [j, v] : p) {
      c.eq(v, b.at(w, j), what + " at (" + std::to_string(w) + "," + std::to_string(j) + ")");
      ks.insert(j);
    }
    for (const auto& [nk, v] : b.entries)
      if (nk.first == w)
        c.require(ks.count(nk.second) > 0,
                  what + ": brute has entry missing from DP at width " + std::to_string(w));
  }
}

}  // namespace detail

// 1. width/height counts: DP = bivariate GF (through width 40) = brute DFS (width 20)
inline CheckResult check_width_height_agreement() {
  detail::Checker c("width-height triple agreement");
  StatTable dp = width_height_table(40);
  c.eq(dp.at(8, 0), Int(10), "s(8,0)");
  c.eq(dp.at(5, 1), Int(4), "s(5,1)");
  detail::table_vs_upoly(c, dp, S2_xu(41, 40), 40, 40, "DP vs S(x,u)");
  detail::table_vs_upoly(c, dp, S2_xu_direct(27, 26), 26, 26, "DP vs direct-root S(x,u)");
  // closed coefficient formula route
  for (int n = 0; n <= 24 && c.res.ok; ++n)
    for (int k = 0; k <= n; ++k)
      c.eq(s2_closed(n, k), dp.at(n, k),
           "s2 closed form at (" + std::to_string(n) + "," + std::to_string(k) + ")");
  StatTable brute = brute_stat_table(StatPair::WidthHeight, 20);
  StatTable dp20 = width_height_table(20);
  c.require(dp20 == brute, "DP vs brute DFS through width 20");
  // the six per-last-step components sum to S(x,u)
  UPoly S = S2_xu(24, 12);
  UPoly sum;
  for (const char* nm : {"F0", "F1", "G0", "G1", "H0", "H1"}) {
    UPoly P = component_width(nm, 24, 12);
    for (const auto& [k, s] : P.by_power) {
      auto it = sum.by_power.find(k);
      if (it == sum.by_power.end()) sum.by_power.emplace(k, s);
      else it->second = it->second + s;
    }
  }
  for (int k = 0; k <= 12 && c.res.ok; ++k)
    c.require(agree(sum.coeff(k), S.coeff(k)),
              "component sum vs S(x,u) at u^" + std::to_string(k));
  return c.res;
}

// 2. axis-path counts by width: DP, closed formula, GF, OEIS snapshot
inline CheckResult check_axis_width_counts() {
  detail::Checker c("axis-path width counts");
  StatTable dp = width_height_table(28);
  IntSeries g = g00_width(28);
  std::vector<Int> computed;
  for (int n = 0; n <= 6; ++n) {
    Int cl = axis_width_closed(n);
    computed.push_back(cl);
    c.eq(cl, dp.at(4 * n, 0), "closed vs DP at width " + std::to_string(4 * n));
    Rat gc = g.coeff(4 * n) + (n == 0 ? Rat(1) : Rat(0));  // g00 = S(x,0) - 1
    c.eq(gc, Rat(cl), "GF vs closed at width " + std::to_string(4 * n));
  }
  std::vector<long long> expect = {1, 2, 10, 58, 370, 2514, 17850};
  for (int n = 0; n <= 6; ++n)
    c.eq(computed[n], Int(expect[n]), "printed value at n=" + std::to_string(n));
  auto snap = oeis_lookup("A086871");
  c.require(snap && oeis_compare(computed, snap->terms, 7) == OeisResult::Match,
            "A086871 snapshot mismatch");
  return c.res;
}

// 3. totals by width and the even-index OEIS snapshot
inline CheckResult check_width_totals() {
  detail::Checker c("path totals by width");
  StatTable dp = width_height_table(24);
  std::vector<long long> expect = {1, 1, 1, 3, 3, 7, 7, 21, 21, 53, 53, 159};
  for (int n = 0; n <= 11; ++n)
    c.eq(dp.row_total(n), Int(expect[n]), "total at width " + std::to_string(n));
  std::vector<Int> even;
  for (int n = 0; n <= 22; n += 2) even.push_back(dp.row_total(n));
  auto snap = oeis_lookup("A368773");
  c.require(snap && oeis_compare(even, snap->terms, 12) == OeisResult::Match,
            "A368773 snapshot mismatch");
  return c.res;
}

// 4. steps statistic: DP = GF = brute; axis counts 4 routes; closed forms n <= 20
inline CheckResult check_steps_statistic() {
  detail::Checker c("steps statistic agreement");
  StatTable dp = steps_height_table(20);
  detail::table_vs_upoly(c, dp, S3_xu(21, 20), 20, 20, "DP vs S(x,u)");
  detail::table_vs_upoly(c, dp, S3_xu_direct(15, 14), 14, 14, "DP vs direct-root S(x,u)");
  c.eq(dp.at(7, 0), Int(5), "s(7,0)");
  StatTable brute = brute_stat_table(StatPair::StepsHeight, 14);
  StatTable dp14 = steps_height_table(14);
  c.require(dp14 == brute, "DP vs brute DFS through 14 steps");
  std::vector<long long> totals = {1, 1, 2, 4, 7, 13, 25, 47, 89, 171, 328, 630};
  for (int n = 0; n <= 11; ++n)
    c.eq(dp.row_total(n), Int(totals[n]), "total at " + std::to_string(n) + " steps");
  std::vector<long long> axis = {1, 0, 0, 1, 1, 1, 3, 5, 7, 14, 26, 43, 79, 148};
  IntSeries g = S3_x0(20);
  std::vector<Int> computed;
  for (int n = 0; n <= 13; ++n) {
    computed.push_back(axis_steps_closed(n));
    c.eq(computed[n], Int(axis[n]), "axis count at " + std::to_string(n) + " steps");
    c.eq(computed[n], dp.at(n, 0), "closed vs DP axis count at " + std::to_string(n));
    c.eq(Rat(computed[n]) - (n == 0 ? Rat(1) : Rat(0)), g00_steps(20).coeff(n),
         "GF vs closed axis count at " + std::to_string(n));
    c.eq(Rat(computed[n]), g.coeff(n), "S(x,0) vs closed axis count at " + std::to_string(n));
  }
  auto snap = oeis_lookup("A346503");
  c.require(snap && oeis_compare(computed, snap->terms, 14) == OeisResult::Match,
            "A346503 snapshot mismatch");
  for (int n = 0; n <= 20 && c.res.ok; ++n)
    for (int k = 0; k <= n; ++k)
      c.eq(s3_closed(n, k), dp.at(n, k),
           "s3 closed form at (" + std::to_string(n) + "," + std::to_string(k) + ")");
  return c.res;
}

// 5. area: DP = geometry (width 24) = continued fraction (width 32); A(1,y)
inline CheckResult check_area() {
  detail::Checker c("area statistic agreement");
  detail::axis_poly_vs_brute(c, area_polys(24), StatPair::WidthArea, 24, "area DP vs geometry");
  AxisPolyTable dp = area_polys(32);
  int ymax = 0;
  for (const auto& [w, p] : dp.by_width)
    for (const auto& [j, v] : p)
      if (j > ymax) ymax = j;
  BivarPoly cf = area_cf(32, ymax);
  for (int w = 0; w <= 32; w += 4)
    for (int j = 0; j <= ymax; ++j)
      c.eq(dp.at(w).count(j) ? dp.at(w).find(j)->second : Int(0), cf.coeff(w, j),
           "area DP vs continued fraction at (" + std::to_string(w) + "," + std::to_string(j) + ")");
  // [y^j] A(1,y): area j only occurs at widths <= 4j
  AxisPolyTable wide = area_polys(36);
  std::vector<long long> expect = {1, 2, 8, 34, 144, 616, 2634, 11280, 48304, 206904};
  for (int j = 0; j <= 9; ++j) {
    Int tot = 0;
    for (const auto& [w, p] : wide.by_width) {
      auto it = p.find(j);
      if (it != p.end()) tot += it->second;
    }
    c.eq(tot, Int(expect[j]), "area total at y^" + std::to_string(j));
  }
  return c.res;
}

// 6. kissing: DP = geometry (width 24) = closed GF (width 32); totals, Schroeder
inline CheckResult check_kissing() {
  detail::Checker c("kissing statistic agreement");
  detail::axis_poly_vs_brute(c, kiss_polys(24), StatPair::WidthKiss, 24, "kiss DP vs geometry");
  AxisPolyTable dp = kiss_polys(32);
  int ymax = 0;
  for (const auto& [w, p] : dp.by_width)
    for (const auto& [j, v] : p)
      if (j > ymax) ymax = j;
  BivarPoly gf = kiss_gf(32, ymax);
  for (int w = 0; w <= 32; w += 4)
    for (int j = 0; j <= ymax; ++j) {
      const YPoly& p = dp.at(w);
      auto it = p.find(j);
      c.eq(it != p.end() ? it->second : Int(0), gf.coeff(w, j),
           "kiss DP vs closed GF at (" + std::to_string(w) + "," + std::to_string(j) + ")");
    }
  {
    const YPoly& p = dp.at(24);
    auto it = p.find(9);
    c.eq(it != p.end() ? it->second : Int(0), Int(1600), "coefficient of x^24 y^9");
  }
  std::vector<long long> expect = {1, 2, 8, 34, 152, 706, 3376, 16514, 82256};
  IntSeries a1 = kiss_gf_at_x1(10);
  for (int n = 0; n <= 8; ++n) {
    c.eq(kiss_total_closed(n), Int(expect[n]), "kiss total at y^" + std::to_string(n));
    c.eq(a1.coeff(n), Rat(expect[n]), "A(1,y) series at y^" + std::to_string(n));
  }
  for (int n = 1; n <= 12; ++n)
    c.eq(2 * kiss_total_closed(n), schroder_r(n + 1) - schroder_r(n),
         "Schroeder relation at n=" + std::to_string(n));
  return c.res;
}

// 7. inchworm: DP = closed GF; Catalan totals; Narayana triangle; A'(1,y)
inline CheckResult check_inchworm() {
  detail::Checker c("inchworm statistic agreement");
  detail::axis_poly_vs_brute(c, inchworm_polys(24), StatPair::WidthKissInchworm, 24,
                             "inchworm DP vs geometry");
  AxisPolyTable dp = inchworm_polys(32);
  int ymax = 0;
  for (const auto& [w, p] : dp.by_width)
    if (w <= 24)
      for (const auto& [j, v] : p)
        if (j > ymax) ymax = j;
  BivarPoly gf = inchworm_gf(24, ymax);
  for (int w = 0; w <= 24; w += 4)
    for (int j = 0; j <= ymax; ++j) {
      const YPoly& p = dp.at(w);
      auto it = p.find(j);
      c.eq(it != p.end() ? it->second : Int(0), gf.coeff(w, j),
           "inchworm DP vs closed GF at (" + std::to_string(w) + "," + std::to_string(j) + ")");
    }
  std::vector<long long> cat = {1, 1, 2, 5, 14, 42};
  for (int n = 0; n <= 5; ++n) {
    Int tot = 0;
    for (const auto& [j, v] : dp.at(4 * n)) tot += v;
    c.eq(tot, Int(cat[n]), "Catalan total at width " + std::to_string(4 * n));
  }
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      const YPoly& p = dp.at(4 * n);
      auto it = p.find(n + k - 1);
      c.eq(it != p.end() ? it->second : Int(0), narayana(n, k),
           "Narayana at (" + std::to_string(n) + "," + std::to_string(k) + ")");
      c.eq(inchworm_closed(4 * n, n + k - 1), narayana(n, k), "triangle accessor");
    }
  std::vector<long long> expect = {1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423};
  IntSeries a1 = inchworm_gf_at_x1(12);
  std::vector<Int> computed;
  for (int n = 0; n <= 10; ++n) {
    computed.push_back(a1.coeff_int(n));
    c.eq(computed[n], Int(expect[n]), "A'(1,y) at y^" + std::to_string(n));
  }
  auto snap = oeis_lookup("A004148");
  c.require(snap && oeis_compare(computed, snap->terms, 11) == OeisResult::Match,
            "A004148 snapshot mismatch");
  auto nsnap = oeis_lookup("A001263");
  c.require(nsnap.has_value(), "A001263 snapshot missing");
  if (c.res.ok) {
    std::size_t idx = 0;
    for (int n = 1; idx < nsnap->terms.size(); ++n)
      for (int k = 1; k <= n && idx < nsnap->terms.size(); ++k, ++idx)
        c.eq(narayana(n, k), nsnap->terms[idx], "A001263 snapshot entry");
  }
  return c.res;
}

// 8. bijections: injective, codomain-valid, full cardinality, statistic transport
inline CheckResult check_bijections(int max_width = 24, int max_steps = 14) {
  detail::Checker c("bijection suites");
  // f: axis paths of width 4n -> 2-colored skew Dyck with n up-steps
  std::map<int, std::vector<PackingPath>> axis_by_width;
  enumerate_paths({max_width, std::nullopt}, true,
                  [&](const PackingPath& p) { axis_by_width[p.width()].push_back(p); });
  for (const auto& [w, dom] : axis_by_width) {
    if (w % 4 != 0) { c.require(false, "axis path of width not 0 mod 4"); break; }
    int n = w / 4;
    std::set<ColoredSkewDyckPath> imgs;
    for (const PackingPath& p : dom) {
      ColoredSkewDyckPath im = to_skew_dyck(p);
      c.require(im.valid(), "invalid skew Dyck image of " + p.to_tokens());
      c.eq(im.up_steps(), n, "up-step count of image of " + p.to_tokens());
      c.require(imgs.insert(im).second, "duplicate skew Dyck image of " + p.to_tokens());
    }
    if (n <= 6)
      c.eq(imgs.size(), enumerate_skew_dyck(n).size(),
           "skew Dyck cardinality at n=" + std::to_string(n));
  }
  // g: axis paths with n steps -> quasi-Motzkin words of length n
  std::map<int, std::vector<PackingPath>> axis_by_steps;
  enumerate_paths({std::nullopt, max_steps}, true,
                  [&](const PackingPath& p) { axis_by_steps[p.nbsteps()].push_back(p); });
  for (int n = 0; n <= max_steps; ++n) {
    std::set<QMotzkinPath> imgs;
    for (const PackingPath& p : axis_by_steps[n]) {
      QMotzkinPath im = to_qmotzkin(p);
      c.require(im.valid(), "invalid quasi-Motzkin image of " + p.to_tokens());
      c.eq(static_cast<int>(im.toks.size()), n, "length of image of " + p.to_tokens());
      c.require(imgs.insert(im).second, "duplicate quasi-Motzkin image of " + p.to_tokens());
    }
    c.eq(imgs.size(), enumerate_qmotzkin(n).size(),
         "quasi-Motzkin cardinality at n=" + std::to_string(n));
  }
  // inchworm circle sequences -> Dyck (onto, peaks = 2n - kiss) and peakless Motzkin
  for (const auto& [w, dom] : axis_by_width) {
    int n = w / 4;
    std::set<DyckPath> dycks;
    std::set<PeaklessMotzkinPath> pls;
    for (const PackingPath& p : dom) {
      if (!p.is_inchworm()) continue;
      CircleSequence cs = path_to_circle_sequence(p);
      int kiss = static_cast<int>(cs.size());
      DyckPath d = inchworm_to_dyck(cs);
      c.require(d.valid(), "invalid Dyck image of " + p.to_tokens());
      c.eq(static_cast<int>(d.ups.size()), 2 * n, "Dyck length for " + p.to_tokens());
      c.eq(d.peaks(), 2 * n - kiss, "peak count for " + p.to_tokens());
      c.require(dycks.insert(d).second, "duplicate Dyck image of " + p.to_tokens());
      PeaklessMotzkinPath m = inchworm_to_peakless(cs);
      c.require(m.valid(), "invalid peakless image of " + p.to_tokens());
      c.eq(static_cast<int>(m.toks.size()), kiss, "peakless length for " + p.to_tokens());
      c.require(pls.insert(m).second, "duplicate peakless image of " + p.to_tokens());
    }
    if (n >= 1)
      c.eq(Int(dycks.size()), catalan(n), "Dyck cardinality at n=" + std::to_string(n));
  }
  return c.res;
}

// 9. Riordan arrays: counts = pairs; A/Z sequences; inverse identity
inline CheckResult check_riordan() {
  detail::Checker c("Riordan array agreement");
  const int m = 12;
  for (CountArray which : {CountArray::Se2, CountArray::So2, CountArray::Se3, CountArray::So3}) {
    RiordanMatrix counts = RiordanMatrix::from_counts(which, m);
    RiordanMatrix pairs = pair_matrix(which, m);
    c.require(counts == pairs, "counts-built != pair-built matrix");
  }
  RiordanMatrix se2 = pair_matrix(CountArray::Se2, m);
  auto a = a_sequence(se2, 6);
  auto z = z_sequence(se2, 6);
  std::vector<long long> aexp = {1, 4, 4, 4, 4, 4}, zexp = {2, 6, 2, 6, 2, 6};
  for (int i = 0; i < 6; ++i) {
    c.eq(a[i], Rat(aexp[i]), "A-sequence term " + std::to_string(i));
    c.eq(z[i], Rat(zexp[i]), "Z-sequence term " + std::to_string(i));
  }
  // row reproduction from the recurrences
  auto afull = a_sequence(se2, m - 1);
  auto zfull = z_sequence(se2, m - 1);
  for (int n = 0; n + 1 < m; ++n) {
    for (int k = 0; k <= n; ++k) {
      Rat s = 0;
      for (int t = 0; t < static_cast<int>(afull.size()) && k + t < m; ++t)
        s += afull[t] * Rat(se2.at(n, k + t));
      c.eq(s, Rat(se2.at(n + 1, k + 1)), "A-recurrence row " + std::to_string(n + 1));
    }
    Rat s = 0;
    for (int t = 0; t < static_cast<int>(zfull.size()) && t < m; ++t)
      s += zfull[t] * Rat(se2.at(n, t));
    c.eq(s, Rat(se2.at(n + 1, 0)), "Z-recurrence row " + std::to_string(n + 1));
  }
  RiordanMatrix inv = se2.inverse();
  // inverse pair has g = (1-x)/(1+x), f = (x-x^2)/(1+3x)
  long N = m + 2;
  IntSeries gtar = IntSeries::poly({1, -1}, N) / IntSeries::poly({1, 1}, N);
  IntSeries ftar = IntSeries::poly({0, 1, -1}, N) / IntSeries::poly({1, 3}, N);
  c.require(agree(inv.g(), gtar), "inverse g mismatch");
  c.require(agree(inv.f(), ftar), "inverse f mismatch");
  RiordanMatrix prod = multiply(se2, inv);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      c.eq(prod.at(i, j), Int(i == j ? 1 : 0), "product entry");
  return c.res;
}

// 10. asymptotics (slow): closed-form ratios and floating expected height
inline CheckResult check_asymptotics() {
  detail::Checker c("asymptotic regimes");
  auto ratio_ok = [&](double exact, double asym, double tol, const std::string& what) {
    double r = exact / asym;
    c.require(r > 1 - tol && r < 1 + tol,
              what + ": ratio " + std::to_string(r) + " outside tolerance");
  };
  ratio_ok(axis_width_closed(100).convert_to<double>(), asymptote("axis_width", 100), 0.05,
           "axis-width counts at n=100");
  ratio_ok(axis_steps_closed(500).convert_to<double>(), asymptote("axis_steps", 500), 0.05,
           "axis-steps counts at n=500");
  ratio_ok(expected_height_float(2000, HeightStat::Width), asymptote("exp_height_width", 2000),
           0.15, "expected height at width 2000");
  ratio_ok(expected_height_float(2000, HeightStat::Steps), asymptote("exp_height_steps", 2000),
           0.15, "expected height at 2000 steps");
  return c.res;
}

// closed-form algebra: Vieta relations, functional equations, Lagrange route
inline CheckResult check_series_identities() {
  detail::Checker c("closed-form series identities");
  long N = 32;
  {
    IntSeries r = r_width(N), s = s_width(N);
    c.require(agree(r * s, IntSeries::poly({1}, N)), "width roots: r*s != 1");
    IntSeries sum = (IntSeries::poly({1, 0, 0, 0, -3}, N + 2) / IntSeries::monomial(2, N + 2))
                        .truncate(N);
    c.require(agree(r + s, sum), "width roots: r+s mismatch");
    IntSeries lhs = r * r;
    IntSeries rhs = ((IntSeries::poly({1, 0, 0, 0, -3}, N + 2) * r_width(N + 2) -
                      IntSeries::monomial(2, N + 2)) /
                     IntSeries::monomial(2, N + 2))
                        .truncate(N);
    c.require(agree(lhs, rhs), "width root quadratic relation");
  }
  {
    IntSeries r = r_steps(N), s = s_steps(N);
    c.require(agree(r * s, IntSeries::poly({1}, N)), "steps roots: r*s != 1");
    // S(x,0) = 1 + (x^3/(1-x)) S(x,0)^2
    IntSeries S = S3_x0(N);
    IntSeries rhs = IntSeries::poly({1}, N) +
                    (IntSeries::monomial(3, N) / IntSeries::poly({1, -1}, N)) * S * S;
    c.require(agree(S, rhs), "steps axis GF functional equation");
  }
  {
    // A = 1 + x^2 B A for the kiss pair, and the inchworm analogue
    BivarPoly A = kiss_gf(20, 10), B = kiss_gf_B(20, 10);
    BivarPoly x2(20, 10);
    x2.add_term(2, 0, 1);
    c.require(A == BivarPoly::one(20, 10) + x2 * B * A, "kiss GF pair equation");
  }
  {
    // Lagrange route for the width root: [x^n] rhat^k = (k/n)[x^{n-k}]((1+3x)/(1-x))^n
    // with rhat = (1 - 3x - sqrt(1-10x+9x^2))/2
    long M = 14;
    IntSeries rhat =
        (IntSeries::poly({1, -3}, M) - IntSeries::poly({1, -10, 9}, M).sqrt()).scale(Rat(1, 2));
    for (long k = 1; k <= 4 && c.res.ok; ++k) {
      IntSeries rk = IntSeries::poly({1}, M);
      for (long i = 0; i < k; ++i) rk = (rk * rhat).truncate(M);
      for (long n = k; n < M; ++n) {
        IntSeries base = IntSeries::poly({1, 3}, M) / IntSeries::poly({1, -1}, M);
        IntSeries pw = IntSeries::poly({1}, M);
        for (long i = 0; i < n; ++i) pw = (pw * base).truncate(M);
        c.eq(rk.coeff(n), Rat(k, n) * pw.coeff(n - k),
             "Lagrange coefficient at (" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  return c.res;
}

// 11. geometry unit anchors on the fixed reference path
inline const char* kReferencePathTokens =
    "U Ub Db Fb F D U F Fb Ub Db Fb Ub U F Fb F D Db D";

inline CheckResult check_geometry_anchors() {
  detail::Checker c("geometry unit anchors");
  PackingPath p = parse_path(kReferencePathTokens);
  c.eq(p.width(), 28, "width");
  c.eq(area_of(p), 9, "area");
  c.eq(kissing_of(p), 8, "kissing number");
  auto below = circles_below(p);
  auto touched = touched_circles(p);
  std::vector<CircleCenter> untouched;
  for (const auto& cc : below)
    if (!touched.count(cc)) untouched.push_back(cc);
  c.eq(untouched.size(), std::size_t{1}, "untouched circle count");
  if (c.res.ok) c.require(untouched[0] == CircleCenter{22, 0}, "untouched circle is not (22,0)");
  return c.res;
}

inline std::vector<CheckResult> run_suite(const std::string& suite, bool include_slow = false) {
  std::vector<CheckResult> out;
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  if (want("height")) {
    out.push_back(check_width_height_agreement());
    out.push_back(check_axis_width_counts());
    out.push_back(check_width_totals());
    out.push_back(check_steps_statistic());
  }
  if (want("area")) {
    out.push_back(check_area());
    out.push_back(check_geometry_anchors());
  }
  if (want("kiss")) {
    out.push_back(check_kissing());
    out.push_back(check_inchworm());
  }
  if (want("bijections")) out.push_back(check_bijections());
  if (want("riordan")) out.push_back(check_riordan());
  if (want("closedforms")) out.push_back(check_series_identities());
  if (suite == "all" && include_slow) out.push_back(check_asymptotics());
  return out;
}

}  // namespace hexpath
