#pragma once
// Closed-form generating functions, coefficient formulas, and asymptotics,
// evaluated exactly at a requested truncation order.

#include <cmath>
#include <stdexcept>
#include <string>

#include "hexpath/series.hpp"
#include "hexpath/upoly.hpp"

namespace hexpath {

struct IndexOutOfDomain : std::runtime_error {
  IndexOutOfDomain() : std::runtime_error("index outside the formula's domain") {}
};
struct UnknownName : std::runtime_error {
  explicit UnknownName(const std::string& n) : std::runtime_error("unknown name: " + n) {}
};
struct OrderTooLarge : std::runtime_error {
  OrderTooLarge() : std::runtime_error("requested order exceeds the configured maximum") {}
};

inline constexpr long kMaxOrder = 512;

inline void check_order(long order) {
  if (order > kMaxOrder) throw OrderTooLarge();
}

// ---- width statistic (kernel roots of u^4 x^2 + 3 u^2 x^4 - u^2 + x^2) ----

inline IntSeries rad_w(long N) {  // sqrt(1 - 10 x^4 + 9 x^8)
  check_order(N);
  std::vector<Rat> c(N > 0 ? N : 0);
  if (N > 0) c[0] = 1;
  if (N > 4) c[4] = -10;
  if (N > 8) c[8] = 9;
  return IntSeries(0, std::move(c), N).sqrt();
}

inline IntSeries r_width(long N) {  // ordinary root, valuation 2
  IntSeries num = IntSeries::poly({1, 0, 0, 0, -3}, N + 2) - rad_w(N + 2);
  return num / IntSeries::monomial(2, N + 2, Rat(2));
}

inline IntSeries s_width(long N) {  // Laurent root, valuation -2; r*s = 1
  IntSeries num = IntSeries::poly({1, 0, 0, 0, -3}, N + 2) + rad_w(N + 2);
  return num / IntSeries::monomial(2, N + 2, Rat(2));
}

inline IntSeries g00_width(long N) {  // (r - x^2)/(2x^2) = S(x,0) - 1
  return (r_width(N + 2) - IntSeries::monomial(2, N + 2)) /
         IntSeries::monomial(2, N + 2, Rat(2));
}

inline IntSeries S2_x0(long N) {  // (1 - x^4 - sqrt(1-10x^4+9x^8)) / (4x^4)
  IntSeries num = IntSeries::poly({1, 0, 0, 0, -1}, N + 4) - rad_w(N + 4);
  return num / IntSeries::monomial(4, N + 4, Rat(4));
}

inline IntSeries S2_x1(long N) {
  // (-1 - x + 4x^3 + 9x^4 - 3x^5 + (1+x) sqrt(1-10x^4+9x^8)) / (4x^3 (1-3x^2))
  IntSeries num = IntSeries::poly({-1, -1, 0, 4, 9, -3}, N + 3) +
                  IntSeries::poly({1, 1}, N + 3) * rad_w(N + 3);
  IntSeries den = IntSeries::monomial(3, N + 3, Rat(4)) * IntSeries::poly({1, 0, -3}, N + 3);
  return num / den;
}

// Bivariate S(x,u) per u-power via the corollary formulas rewritten with rs=1:
// [u^{2k}]S = ((x^2+r)/(2x^2)) r^k,  [u^{2k+1}]S = (((1+2x^2)r - x^2)/(2x^3)) r^k.
inline UPoly S2_xu(long N, int max_u) {
  IntSeries r = r_width(N + 4);
  IntSeries even0 = (IntSeries::monomial(2, N + 4) + r) / IntSeries::monomial(2, N + 4, Rat(2));
  IntSeries odd0 = (IntSeries::poly({1, 0, 2}, N + 4) * r - IntSeries::monomial(2, N + 4)) /
                   IntSeries::monomial(3, N + 4, Rat(2));
  UPoly S;
  IntSeries rk = IntSeries::poly({1}, N + 4);
  for (int k = 0; 2 * k <= max_u; ++k) {
    S.set(2 * k, (even0 * rk).truncate(N));
    if (2 * k + 1 <= max_u) S.set(2 * k + 1, (odd0 * rk).truncate(N));
    rk = (rk * r).truncate(N + 4);
    if (rk.is_zero() || rk.valuation() >= N) break;
  }
  return S;
}

// Redundant direct route through the Laurent root s:
// [u^{2k}]S = ((s x^2 + 1)/(2x^2)) r^{k+1}, [u^{2k+1}]S = ((1 + 2x^2 - s x^2)/(2x^3)) r^{k+1}.
inline UPoly S2_xu_direct(long N, int max_u) {
  IntSeries r = r_width(N + 6);
  IntSeries s = s_width(N + 6);
  IntSeries even0 = (s * IntSeries::monomial(2, N + 6) + IntSeries::poly({1}, N + 6)) /
                    IntSeries::monomial(2, N + 6, Rat(2));
  IntSeries odd0 = (IntSeries::poly({1, 0, 2}, N + 6) - s * IntSeries::monomial(2, N + 6)) /
                   IntSeries::monomial(3, N + 6, Rat(2));
  UPoly S;
  IntSeries rk = r;
  for (int k = 0; 2 * k <= max_u; ++k) {
    S.set(2 * k, (even0 * rk).truncate(N));
    if (2 * k + 1 <= max_u) S.set(2 * k + 1, (odd0 * rk).truncate(N));
    rk = (rk * r).truncate(N + 6);
    if (rk.is_zero() || rk.valuation() >= N) break;
  }
  return S;
}

// Width generating function split into six components by last step.
inline UPoly component_width(const std::string& name, long N, int max_u) {
  long M = N + 6;
  IntSeries r = r_width(M);
  IntSeries x2 = IntSeries::monomial(2, M);
  UPoly P;
  auto fill = [&](int first_u, int stride, const IntSeries& factor, const IntSeries& rstart) {
    IntSeries rk = rstart;
    for (int u = first_u; u <= max_u; u += stride) {
      P.set(u, (factor * rk).truncate(N));
      rk = (rk * r).truncate(M);
      if (rk.is_zero() || rk.valuation() >= N) break;
    }
  };
  if (name == "F0") {
    P.set(0, IntSeries::poly({1}, N));
    // [u^{2k-1}] = ((2 - r x^2 - 3x^4)/(2x)) r^k, k >= 1
    IntSeries f = (IntSeries::poly({2, 0, 0, 0, -3}, M) - r * x2) /
                  IntSeries::monomial(1, M, Rat(2));
    fill(1, 2, f, r);
  } else if (name == "F1") {
    fill(2, 2, IntSeries::poly({1}, M), r);  // [u^{2k}] = r^k
  } else if (name == "G0") {
    // [u^{2k}] = ((3x^2 + r)/2) r^{k+1}, valid from k = 0 (gives g00)
    IntSeries f = (IntSeries::poly({0, 0, 3}, M) + r).scale(Rat(1, 2));
    fill(0, 2, f, r);
  } else if (name == "G1") {
    // [u^{2k+1}] = ((x^2 + r)/(2x)) r^{k+1}
    IntSeries f = (x2 + r) / IntSeries::monomial(1, M, Rat(2));
    fill(1, 2, f, r);
  } else if (name == "H0") {
    fill(1, 2, IntSeries::monomial(1, M), r);  // [u^{2k-1}] = x r^k
  } else if (name == "H1") {
    IntSeries f = (IntSeries::poly({0, 0, 0, 3}, M) + r * IntSeries::monomial(1, M)).scale(Rat(1, 2));
    fill(1, 2, f, r);  // [u^{2k-1}] = x ((3x^2+r)/2) r^k
  } else {
    throw UnknownName(name);
  }
  return P;
}

// ---- steps statistic ----

inline IntSeries rad_p(long N) {  // sqrt(1 - 2x + x^2 - 4x^3 + 4x^4)
  check_order(N);
  return IntSeries::poly({1, -2, 1, -4, 4}, N).sqrt();
}

inline IntSeries rad_delta(long N) {  // sqrt(1 - 2x^2 - 4x^3 - 3x^4 + 4x^5 + 4x^6) = (1+x) sqrt(p)
  return (IntSeries::poly({1, 1}, N) * rad_p(N)).truncate(N);
}

inline IntSeries r_steps(long N) {  // (1 - x^2 - 2x^3 - sqrt(D)) / (2x^2), valuation 3
  IntSeries num = IntSeries::poly({1, 0, -1, -2}, N + 2) - rad_delta(N + 2);
  return num / IntSeries::monomial(2, N + 2, Rat(2));
}

inline IntSeries s_steps(long N) {
  IntSeries num = IntSeries::poly({1, 0, -1, -2}, N + 2) + rad_delta(N + 2);
  return num / IntSeries::monomial(2, N + 2, Rat(2));
}

inline IntSeries g00_steps(long N) {  // (r - x^2)/(x(x+1)) = S(x,0) - 1
  return (r_steps(N + 2) - IntSeries::monomial(2, N + 2)) /
         (IntSeries::monomial(1, N + 2) * IntSeries::poly({1, 1}, N + 2));
}

inline IntSeries S3_x0(long N) {  // (1 - x - sqrt(p)) / (2x^3)
  IntSeries num = IntSeries::poly({1, -1}, N + 3) - rad_p(N + 3);
  return num / IntSeries::monomial(3, N + 3, Rat(2));
}

inline IntSeries S3_x1(long N) {  // (1 - x - 2x^2 - sqrt(p)) / (2x^2 (2x - 1))
  IntSeries num = IntSeries::poly({1, -1, -2}, N + 2) - rad_p(N + 2);
  IntSeries den = IntSeries::monomial(2, N + 2, Rat(2)) * IntSeries::poly({-1, 2}, N + 2);
  return num / den;
}

// [u^{2k}]S = ((x+r)/(x(x+1))) r^k,  [u^{2k+1}]S = ((rx + 2x^2 + 2x + 1)/(x(x+1))) r^{k+1}.
inline UPoly S3_xu(long N, int max_u) {
  long M = N + 4;
  IntSeries r = r_steps(M);
  IntSeries den = IntSeries::monomial(1, M) * IntSeries::poly({1, 1}, M);
  IntSeries even0 = (IntSeries::monomial(1, M) + r) / den;
  IntSeries odd0 = ((r * IntSeries::monomial(1, M) + IntSeries::poly({1, 2, 2}, M)) / den * r)
                       .truncate(M);
  UPoly S;
  IntSeries rk = IntSeries::poly({1}, M);
  for (int k = 0; 2 * k <= max_u; ++k) {
    S.set(2 * k, (even0 * rk).truncate(N));
    if (2 * k + 1 <= max_u) S.set(2 * k + 1, (odd0 * rk).truncate(N));
    rk = (rk * r).truncate(M);
    if (rk.is_zero() || rk.valuation() >= N) break;
  }
  return S;
}

inline UPoly S3_xu_direct(long N, int max_u) {
  // S = (u(-2x^2 - x(r+2) - 1) - sx - 1) / (x(1+x)(u^2 - s)); expand with
  // 1/(u^2 - s) = -sum u^{2k} r^{k+1}
  long M = N + 6;
  IntSeries r = r_steps(M);
  IntSeries s = s_steps(M);
  IntSeries den = IntSeries::monomial(1, M) * IntSeries::poly({1, 1}, M);
  IntSeries even0 = ((s * IntSeries::monomial(1, M) + IntSeries::poly({1}, M)) / den * r).truncate(M);
  IntSeries odd0 =
      ((IntSeries::poly({1, 2, 2}, M) + r * IntSeries::monomial(1, M)) / den * r).truncate(M);
  UPoly S;
  IntSeries rk = IntSeries::poly({1}, M);
  for (int k = 0; 2 * k <= max_u; ++k) {
    S.set(2 * k, (even0 * rk).truncate(N));
    if (2 * k + 1 <= max_u) S.set(2 * k + 1, (odd0 * rk).truncate(N));
    rk = (rk * r).truncate(M);
    if (rk.is_zero() || rk.valuation() >= N) break;
  }
  return S;
}

// ---- coefficient formulas ----

// w(4n-2k, k) = (k/n) sum_l 3^{n-k-l} C(n+l-1, l) C(n, n-k-l); argument is the width m
inline Int coeff_w2(long m, long k) {
  if (m < 0 || k < 0) throw IndexOutOfDomain();
  if (k == 0) return m == 0 ? 1 : 0;
  if ((m + 2 * k) % 4 != 0) return 0;
  long n = (m + 2 * k) / 4;
  if (n < 1 || k > n) return 0;
  Int s = 0;
  for (long l = 0; l <= n - k; ++l)
    s += pow_int(3, static_cast<unsigned>(n - k - l)) * binom(n + l - 1, l) * binom(n, n - k - l);
  Int v = k * s;
  if (v % n != 0) throw IndexOutOfDomain();
  return v / n;
}

inline Int s2_closed(long n, long k) {
  if (n < 0 || k < 0) return 0;
  if (k % 2 == 0) {
    long j = k / 2;
    if ((n + 2 * j) % 4 != 0) return 0;
    long m = (n + 2 * j) / 4;
    if (m == 0) return (n == 0 && k == 0) ? 1 : 0;
    Int v = coeff_w2(4 * m - 2 * j, j) + coeff_w2(4 * m - 2 * (j - 1), j + 1);
    return v / 2;
  }
  long j = (k - 1) / 2;  // k = 2j+1
  if ((n + 2 * j + 1) % 4 == 0) {
    long m = (n + 2 * j + 1) / 4;
    Int v = coeff_w2(4 * m - 2 * (j - 1), j + 1) - coeff_w2(4 * m - 2 * j, j);
    return v / 2;
  }
  if ((n + 2 * j - 1) % 4 == 0) {
    long m = (n + 2 * j - 1) / 4;
    return coeff_w2(4 * m - 2 * (j - 1), j + 1);
  }
  return 0;
}

inline Int t_coeff(long n, long m) {  // [x^n] (1 - x^2 - 2x^3)^{-m}
  if (n < 0) return 0;
  if (m == 0) return n == 0 ? 1 : 0;
  Int s = 0;
  for (long l = 0; l <= n / 2; ++l)
    s += binom(m + l - 1, l) * binom(l, n - 2 * l) * pow_int(2, static_cast<unsigned>(n - 2 * l));
  return s;
}

// w(n,k) = [x^n] r^k/(1+x); the k = 0 row is [x^n] 1/(1+x) = (-1)^n
inline Int coeff_w3(long n, long k) {
  if (n < 0) return 0;
  if (k == 0) return n % 2 == 0 ? 1 : -1;
  Rat tot = 0;
  for (long i = 0; i <= n; ++i) {
    long top = n - i - 2 * k;
    if (top < 0) continue;
    for (long s = 0; s <= top / 4; ++s) {
      Rat term = Rat(k, k + 2 * s) * Rat(binom(k + 2 * s, s)) *
                 Rat(t_coeff(n - i - 4 * s - 2 * k, 2 * s + k));
      if (i % 2 == 1) term = -term;
      tot += term;
    }
  }
  if (denominator(tot) != 1) throw IndexOutOfDomain();
  return numerator(tot);
}

inline Int s3_closed(long n, long k) {
  if (n < 0 || k < 0) return 0;
  if (k % 2 == 0) {
    long j = k / 2;
    if (n == 0 && k == 0) return 1;
    return coeff_w3(n, j) + coeff_w3(n + 1, j + 1);
  }
  long j = (k + 1) / 2;
  return coeff_w3(n, j + 1) + 2 * coeff_w3(n - 1, j) + 2 * coeff_w3(n, j) + coeff_w3(n + 1, j);
}

inline Int axis_width_closed(long n) {  // [x^{4n}] S(x,0)
  if (n < 0) throw IndexOutOfDomain();
  if (n == 0) return 1;
  Int s = 0;
  for (long k = 0; k <= n; ++k)
    s += pow_int(4, static_cast<unsigned>(k)) * binom(n, k) * binom(n, k + 1);
  Int v = 2 * s;
  return v / n;
}

inline Int axis_steps_closed(long n) {  // [x^n] S(x,0), steps statistic
  if (n < 0) throw IndexOutOfDomain();
  if (n == 0) return 1;
  Int tot = 0;
  for (long k = 0; k <= n / 3; ++k) {
    long top = n - 2 * k - 1, bot = n - 3 * k;
    if (bot < 0 || bot > top) continue;
    tot += catalan(k) * binom(top, bot);
  }
  return tot;
}

inline Int schroder_r(long n) {  // large Schroeder numbers 1, 2, 6, 22, 90, ...
  Int s = 0;
  for (long k = 0; k <= n; ++k) s += binom(n + k, 2 * k) * catalan(k);
  return s;
}

inline Int kiss_total_closed(long n) {  // [y^n] A(1,y) = (1/2) sum C(n+k, 2k-1) C_k
  if (n == 0) return 1;
  Int s = 0;
  for (long k = 1; k <= n + 1; ++k) s += binom(n + k, 2 * k - 1) * catalan(k);
  return s / 2;
}

inline Int narayana(long n, long k) {
  if (n < 1 || k < 1) throw IndexOutOfDomain();
  return binom(n - 1, k - 1) * binom(n, k - 1) / k;
}

// inchworm triangle entry: a(4n, n+k-1) = narayana(n, k)
inline Int inchworm_closed(long w, long kiss) {
  if (w % 4 != 0) throw IndexOutOfDomain();
  long n = w / 4;
  long k = kiss - n + 1;
  if (k < 1 || k > n) return 0;
  return narayana(n, k);
}

// ---- kiss and inchworm generating functions ----

// sqrt on a bivariate polynomial, graded by x-degree (all x powers multiples of 4)
inline BivarPoly bivar_sqrt_x4(const BivarPoly& a) {
  if (a.coeff(0, 0) != 1) throw NonUnitConstantTerm();
  int nx = a.nx(), ny = a.ny();
  BivarPoly s = BivarPoly::one(nx, ny);
  for (int m = 4; m <= nx; m += 4) {
    // 2 * s_m = a_m - sum_{i=4..m-4} s_i s_{m-i}  (per y power)
    std::map<int, Int> acc;
    for (int j = 0; j <= ny; ++j) {
      Int v = a.coeff(m, j);
      if (v != 0) acc[j] = v;
    }
    for (int i = 4; i <= m - 4; i += 4)
      for (int j1 = 0; j1 <= ny; ++j1) {
        Int si = s.coeff(i, j1);
        if (si == 0) continue;
        for (int j2 = 0; j1 + j2 <= ny; ++j2) {
          Int sj = s.coeff(m - i, j2);
          if (sj != 0) acc[j1 + j2] -= si * sj;
        }
      }
    for (auto& [j, v] : acc) {
      if (v == 0) continue;
      if (v % 2 != 0) throw NonIntegerCoefficient();
      s.add_term(m, j, v / 2);
    }
  }
  return s;
}

// A(x,y) for width/kiss: (1 - 4x^4 y + 3x^4 y^2 - sqrt(rad)) / (4 x^4 y^2)
inline BivarPoly kiss_gf(int nx, int ny) {
  BivarPoly rad(nx + 4, ny + 2);
  rad.add_term(0, 0, 1);
  rad.add_term(4, 1, -8);
  rad.add_term(4, 2, -2);
  rad.add_term(8, 2, 16);
  rad.add_term(8, 3, -8);
  rad.add_term(8, 4, 1);
  BivarPoly num(nx + 4, ny + 2);
  num.add_term(0, 0, 1);
  num.add_term(4, 1, -4);
  num.add_term(4, 2, 3);
  num = num - bivar_sqrt_x4(rad);
  BivarPoly out(nx, ny);
  for (const auto& [ij, v] : num.terms()) {
    auto [i, j] = ij;
    if (v % 4 != 0) throw NonIntegerCoefficient();
    out.add_term(i - 4, j - 2, v / 4);
  }
  return out;
}

// B(x,y) from A = 1 + x^2 B A
inline BivarPoly kiss_gf_B(int nx, int ny) {
  BivarPoly A = kiss_gf(nx + 2, ny);
  BivarPoly num = A - BivarPoly::one(nx + 2, ny);
  BivarPoly q = num * A.inverse();
  BivarPoly out(nx, ny);
  for (const auto& [ij, v] : q.terms()) out.add_term(ij.first - 2, ij.second, v);
  return out;
}

// A'(x,y) for inchworm width/kiss
inline BivarPoly inchworm_gf(int nx, int ny) {
  BivarPoly rad(nx + 4, ny + 2);
  rad.add_term(0, 0, 1);
  rad.add_term(4, 1, -2);
  rad.add_term(4, 2, -2);
  rad.add_term(8, 2, 1);
  rad.add_term(8, 3, -2);
  rad.add_term(8, 4, 1);
  BivarPoly num(nx + 4, ny + 2);
  num.add_term(0, 0, 1);
  num.add_term(4, 1, -1);
  num.add_term(4, 2, 1);
  num = num - bivar_sqrt_x4(rad);
  BivarPoly out(nx, ny);
  for (const auto& [ij, v] : num.terms()) {
    auto [i, j] = ij;
    if (v % 2 != 0) throw NonIntegerCoefficient();
    out.add_term(i - 4, j - 2, v / 2);
  }
  return out;
}

inline IntSeries kiss_gf_at_x1(long N) {  // (1 - 4y + 3y^2 - (1-y) sqrt(1-6y+y^2)) / (4y^2)
  IntSeries rad = IntSeries::poly({1, -6, 1}, N + 2).sqrt();
  IntSeries num = IntSeries::poly({1, -4, 3}, N + 2) - IntSeries::poly({1, -1}, N + 2) * rad;
  return num / IntSeries::monomial(2, N + 2, Rat(4));
}

inline IntSeries inchworm_gf_at_x1(long N) {  // (1 - y + y^2 - sqrt(1-2y-y^2-2y^3+y^4)) / (2y^2)
  IntSeries rad = IntSeries::poly({1, -2, -1, -2, 1}, N + 2).sqrt();
  IntSeries num = IntSeries::poly({1, -1, 1}, N + 2) - rad;
  return num / IntSeries::monomial(2, N + 2, Rat(2));
}

// ---- asymptotics ----

inline double asymptote(const std::string& name, double n) {
  const double pi = 3.14159265358979323846;
  if (name == "axis_width") return std::pow(3.0, 1 + 2 * n) / (std::sqrt(pi) * std::pow(1 + 2 * n, 1.5));
  if (name == "total_steps") return std::pow(2.0, n + 1) / std::sqrt(pi * n);
  if (name == "axis_steps") return std::pow(2.0, n + 1) / (std::sqrt(pi) * std::pow(n, 1.5));
  if (name == "exp_height_width") return std::sqrt(pi * n / 2);
  if (name == "exp_height_steps") return 17.0 * std::sqrt(pi * n) / 27.0;
  throw UnknownName(name);
}

}  // namespace hexpath
