#pragma once
// Polynomials in a secondary variable (u or y) with truncated-series
// coefficients, and the continued-fraction evaluator for the area GF.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hexpath/series.hpp"

namespace hexpath {

struct InsufficientDepth : SeriesError {
  InsufficientDepth() : SeriesError("continued-fraction depth cannot certify the requested order") {}
};

struct UPoly {
  std::map<int, IntSeries> by_power;  // u-exponent -> series in x

  IntSeries coeff(int upow) const {
    auto it = by_power.find(upow);
    if (it != by_power.end()) return it->second;
    return IntSeries(0);
  }

  void set(int upow, IntSeries s) {
    if (s.is_zero() && s.order() <= s.valuation()) return;
    by_power.insert_or_assign(upow, std::move(s));
  }

  // value at u=1: sum of all coefficient series
  IntSeries at_one() const {
    IntSeries acc(0);
    bool first = true;
    for (const auto& [k, s] : by_power) {
      if (first) { acc = s; first = false; }
      else acc = acc + s;
    }
    return acc;
  }

  std::string str(const char* var = "u") const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, s] : by_power) {
      if (!first) os << "  +  ";
      first = false;
      os << "(" << s.str() << ")";
      if (k != 0) os << "*" << var << "^" << k;
    }
    return first ? "0" : os.str();
  }
};

// Exact bivariate polynomial truncated at x^Nx, y^Ny; the carrier for the
// area continued fraction.
class BivarPoly {
 public:
  BivarPoly(int nx, int ny) : nx_(nx), ny_(ny) {}

  static BivarPoly one(int nx, int ny) {
    BivarPoly p(nx, ny);
    p.c_[{0, 0}] = 1;
    return p;
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }

  Int coeff(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Int(0) : it->second;
  }

  void add_term(int i, int j, const Int& v) {
    if (i > nx_ || j > ny_) return;
    auto& slot = c_[{i, j}];
    slot += v;
    if (slot == 0) c_.erase({i, j});
  }

  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [ij, v] : b.c_) r.add_term(ij.first, ij.second, v);
    return r;
  }

  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [ij, v] : b.c_) r.add_term(ij.first, ij.second, -v);
    return r;
  }

  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r(a.nx_, a.ny_);
    for (const auto& [ij1, v1] : a.c_)
      for (const auto& [ij2, v2] : b.c_) {
        int i = ij1.first + ij2.first, j = ij1.second + ij2.second;
        if (i <= r.nx_ && j <= r.ny_) r.add_term(i, j, v1 * v2);
      }
    return r;
  }

  // geometric inverse; constant term must be 1 and every other term must
  // carry a positive x power (true for all continued-fraction denominators)
  BivarPoly inverse() const {
    if (coeff(0, 0) != 1) throw SeriesError("BivarPoly::inverse needs unit constant term");
    BivarPoly rest(nx_, ny_);
    for (const auto& [ij, v] : c_)
      if (ij != std::pair<int, int>{0, 0}) rest.add_term(ij.first, ij.second, -v);
    BivarPoly r = one(nx_, ny_);
    BivarPoly term = one(nx_, ny_);
    while (true) {
      term = term * rest;
      if (term.c_.empty()) break;
      r = r + term;
    }
    return r;
  }

  bool operator==(const BivarPoly& o) const { return c_ == o.c_; }

  const std::map<std::pair<int, int>, Int>& terms() const { return c_; }

 private:
  int nx_, ny_;
  std::map<std::pair<int, int>, Int> c_;
};

struct CfLevel {
  BivarPoly num;
  BivarPoly den;
};

// Evaluate 1/(1 - K_0), K_j = num_j / (den_j - K_{j+1}), truncated at
// (nx, ny). Certification: level j must contribute only beyond the order
// once j >= depth; for the area fraction level j carries x^4 y^{j+1}.
inline BivarPoly cf_eval(const std::vector<CfLevel>& levels, int depth, int nx, int ny) {
  if (depth > static_cast<int>(levels.size())) throw InsufficientDepth();
  BivarPoly tail(nx, ny);
  for (int j = depth - 1; j >= 0; --j) {
    BivarPoly den = levels[j].den - tail;
    tail = levels[j].num * den.inverse();
  }
  return (BivarPoly::one(nx, ny) - tail).inverse();
}

// Area continued fraction: A = 1/(1 - 2x^4y/(1 - 2x^4y - x^4y^2/(1 - 3x^4y^2 - ...)))
inline std::vector<CfLevel> area_cf_levels(int depth, int nx, int ny) {
  std::vector<CfLevel> ls;
  for (int j = 0; j < depth; ++j) {
    BivarPoly num(nx, ny), den = BivarPoly::one(nx, ny);
    if (j == 0) {
      num.add_term(4, 1, 2);
      den.add_term(4, 1, -2);
    } else {
      num.add_term(4, j + 1, 1);
      den.add_term(4, j + 1, -3);
    }
    ls.push_back({num, den});
  }
  return ls;
}

// depth ceil(max(nx/4, ny)) is sufficient: level j only contributes x^{4(j+1)} y^{...>=j+1}
inline int area_cf_sufficient_depth(int nx, int ny) {
  int d = (nx + 3) / 4;
  return d > ny ? d : ny;
}

inline BivarPoly area_cf(int nx, int ny) {
  int depth = area_cf_sufficient_depth(nx, ny);
  return cf_eval(area_cf_levels(depth, nx, ny), depth, nx, ny);
}

}  // namespace hexpath
