#pragma once
// Riordan arrays: built from count tables or from (g, f) pairs, the group
// operations at truncation, and A/Z-sequence extraction.

#include <stdexcept>
#include <string>
#include <vector>

#include "hexpath/closed_forms.hpp"
#include "hexpath/counters.hpp"
#include "hexpath/series.hpp"

namespace hexpath {

struct InvalidPair : std::runtime_error {
  InvalidPair() : std::runtime_error("not a valid Riordan pair (need g(0)!=0, f(0)=0, f'(0)!=0)") {}
};
struct NotRiordan : std::runtime_error {
  NotRiordan() : std::runtime_error("A/Z recurrences inconsistent across rows") {}
};

enum class CountArray { Se2, So2, Se3, So3 };

class RiordanMatrix {
 public:
  RiordanMatrix(int m, std::vector<std::vector<Int>> rows)
      : m_(m), rows_(std::move(rows)) {}

  static RiordanMatrix from_counts(CountArray which, int m) {
    if (m > 16) throw BoundExceeded();
    std::vector<std::vector<Int>> rows(m, std::vector<Int>(m, 0));
    for (int n = 0; n < m; ++n)
      for (int k = 0; k <= n; ++k) {
        switch (which) {
          case CountArray::Se2: rows[n][k] = s2_closed(4 * n - 2 * k, 2 * k); break;
          case CountArray::So2: rows[n][k] = s2_closed(2 * n + 1, 2 * k + 1); break;
          case CountArray::Se3: rows[n][k] = s3_closed(n + k, 2 * k); break;
          case CountArray::So3: rows[n][k] = s3_closed(n + k + 1, 2 * k + 1); break;
        }
      }
    return RiordanMatrix(m, std::move(rows));
  }

  static RiordanMatrix from_pair(const IntSeries& g, const IntSeries& f, int m) {
    if (g.coeff(0) == 0 || f.coeff(0) != 0 || f.coeff(1) == 0) throw InvalidPair();
    std::vector<std::vector<Int>> rows(m, std::vector<Int>(m, 0));
    IntSeries col = g.truncate(m);
    for (int k = 0; k < m; ++k) {
      for (int n = k; n < m; ++n) rows[n][k] = col.coeff_int(n);
      col = (col * f).truncate(m);
    }
    RiordanMatrix r(m, std::move(rows));
    r.g_ = g.truncate(m);
    r.f_ = f.truncate(m);
    r.has_pair_ = true;
    return r;
  }

  int size() const { return m_; }
  const Int& at(int n, int k) const { return rows_[n][k]; }
  bool has_pair() const { return has_pair_; }
  const IntSeries& g() const { return g_; }
  const IntSeries& f() const { return f_; }

  // group law (g, f) * (h, l) = (g * h(f), l(f))
  friend RiordanMatrix multiply(const RiordanMatrix& A, const RiordanMatrix& B) {
    int m = std::min(A.m_, B.m_);
    std::vector<std::vector<Int>> rows(m, std::vector<Int>(m, 0));
    for (int n = 0; n < m; ++n)
      for (int k = 0; k < m; ++k) {
        Int s = 0;
        for (int t = 0; t < m; ++t) s += A.rows_[n][t] * B.rows_[t][k];
        rows[n][k] = s;
      }
    RiordanMatrix r(m, std::move(rows));
    if (A.has_pair_ && B.has_pair_) {
      r.g_ = (A.g_ * B.g_.compose(A.f_)).truncate(m);
      r.f_ = B.f_.compose(A.f_).truncate(m);
      r.has_pair_ = true;
    }
    return r;
  }

  // (g, f)^{-1} = (1/(g o fbar), fbar), fbar the compositional inverse of f
  RiordanMatrix inverse() const {
    if (!has_pair_) throw InvalidPair();
    IntSeries fbar = f_.reversion();
    IntSeries ginv = g_.compose(fbar).inverse();
    return from_pair(ginv, fbar, m_);
  }

  friend bool operator==(const RiordanMatrix& a, const RiordanMatrix& b) {
    return a.rows_ == b.rows_;
  }

  std::string to_csv() const {
    std::string out;
    for (int n = 0; n < m_; ++n) {
      for (int k = 0; k < m_; ++k) {
        if (k) out += ',';
        out += rows_[n][k].str();
      }
      out += '\n';
    }
    return out;
  }

 private:
  int m_;
  std::vector<std::vector<Int>> rows_;
  IntSeries g_{0}, f_{0};
  bool has_pair_ = false;
};

// Closed (g, f) pairs for the four count arrays.
inline RiordanMatrix pair_matrix(CountArray which, int m) {
  // monomial divisions below shed up to x^5 of tracked precision
  long N = m + 8;
  switch (which) {
    case CountArray::Se2: {
      IntSeries rad = IntSeries::poly({1, -10, 9}, N).sqrt();
      IntSeries g = (IntSeries::poly({1, -1}, N) - rad) / IntSeries::monomial(1, N, Rat(4));
      IntSeries f = (IntSeries::poly({1, -3}, N) - rad).scale(Rat(1, 2));
      return RiordanMatrix::from_pair(g, f, m);
    }
    case CountArray::So2: {
      IntSeries rad = IntSeries::poly({1, 0, -10, 0, 9}, N).sqrt();
      IntSeries g = (IntSeries::poly({1, 2, -5, -6}, N) - IntSeries::poly({1, 2}, N) * rad) /
                    IntSeries::monomial(3, N, Rat(4));
      IntSeries f = (IntSeries::poly({1, 0, -3}, N) - rad) / IntSeries::monomial(1, N, Rat(2));
      return RiordanMatrix::from_pair(g, f, m);
    }
    case CountArray::Se3: {
      IntSeries rad = rad_p(N);
      IntSeries g = (IntSeries::poly({1, -1}, N) - rad) / IntSeries::monomial(3, N, Rat(2));
      IntSeries f = (IntSeries::poly({1, 0, -1, -2}, N) - IntSeries::poly({1, 1}, N) * rad) /
                    IntSeries::monomial(3, N, Rat(2));
      return RiordanMatrix::from_pair(g, f, m);
    }
    default: {
      IntSeries rad = rad_p(N);
      IntSeries g = (IntSeries::poly({1, 0, 0, -3, -2}, N) - IntSeries::poly({1, 1, 1}, N) * rad) /
                    IntSeries::monomial(5, N, Rat(2));
      IntSeries f = (IntSeries::poly({1, 0, -1, -2}, N) - IntSeries::poly({1, 1}, N) * rad) /
                    IntSeries::monomial(3, N, Rat(2));
      return RiordanMatrix::from_pair(g, f, m);
    }
  }
}

// Triangular solve: d_{n+1,k+1} = sum_t a_t d_{n,k+t} with k = n-j picked so
// the j-th equation ends at a_j with unit pivot d_{n,n}.
inline std::vector<Rat> a_sequence(const RiordanMatrix& M, int len) {
  int m = M.size();
  if (len > m - 1) len = m - 1;
  int n = m - 2;
  std::vector<Rat> a(len);
  for (int j = 0; j < len; ++j) {
    int k = n - j;
    if (k < 0) throw NotRiordan();
    Rat lhs(M.at(n + 1, k + 1));
    for (int t = 0; t < j; ++t) lhs -= a[t] * Rat(M.at(n, k + t));
    if (M.at(n, n) == 0) throw NotRiordan();
    a[j] = lhs / Rat(M.at(n, n));
  }
  // consistency across all computed rows
  for (int nn = 0; nn + 1 < m; ++nn)
    for (int k = 0; k + 1 <= nn + 1; ++k) {
      Rat s = 0;
      for (int t = 0; t < len && k + t < m; ++t) s += a[t] * Rat(M.at(nn, k + t));
      bool complete = nn < k + len;  // truncated terms all hit zero entries
      if (complete && s != Rat(M.at(nn + 1, k + 1))) throw NotRiordan();
    }
  return a;
}

inline std::vector<Rat> z_sequence(const RiordanMatrix& M, int len) {
  int m = M.size();
  if (len > m - 1) len = m - 1;
  std::vector<Rat> z(len);
  for (int j = 0; j < len; ++j) {
    Rat lhs(M.at(j + 1, 0));
    for (int t = 0; t < j; ++t) lhs -= z[t] * Rat(M.at(j, t));
    if (M.at(j, j) == 0) throw NotRiordan();
    z[j] = lhs / Rat(M.at(j, j));
  }
  return z;
}

}  // namespace hexpath
