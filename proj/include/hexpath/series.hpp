#pragma once
// Truncated Laurent series over exact rationals. Every value carries an
// explicit truncation order: coefficients of x^k are certified for k < order.

#include <cassert>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexpath/bigint.hpp"

namespace hexpath {

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZeroSeries : SeriesError {
  DivisionByZeroSeries() : SeriesError("division by a series that is zero to its order") {}
};
struct NonUnitConstantTerm : SeriesError {
  NonUnitConstantTerm() : SeriesError("sqrt needs constant term 1") {}
};
struct OddValuation : SeriesError {
  OddValuation() : SeriesError("sqrt needs even valuation") {}
};
struct NonIntegerCoefficient : SeriesError {
  NonIntegerCoefficient() : SeriesError("expected an integer coefficient") {}
};

class IntSeries {
 public:
  // zero series known to the given order
  explicit IntSeries(long order = 0) : val_(order), order_(order) {}

  // coefficients c[i] of x^(val+i), certified below `order`
  IntSeries(long val, std::vector<Rat> coeffs, long order)
      : val_(val), coeffs_(std::move(coeffs)), order_(order) {
    if (val_ + static_cast<long>(coeffs_.size()) > order_)
      coeffs_.resize(order_ > val_ ? order_ - val_ : 0);
    normalize();
  }

  // ordinary polynomial from low-degree coefficients, truncated at `order`
  static IntSeries poly(std::initializer_list<long> cs, long order) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return IntSeries(0, std::move(v), order);
  }

  static IntSeries monomial(long k, long order, Rat c = Rat(1)) {
    return IntSeries(k, {std::move(c)}, order);
  }

  long order() const { return order_; }
  long valuation() const { return val_; }  // first stored exponent (== order when zero)
  bool is_zero() const { return coeffs_.empty(); }

  Rat coeff(long k) const {
    if (k >= order_) throw SeriesError("coefficient beyond the truncation order");
    if (k < val_ || k >= val_ + static_cast<long>(coeffs_.size())) return Rat(0);
    return coeffs_[k - val_];
  }

  Int coeff_int(long k) const {
    Rat c = coeff(k);
    if (denominator(c) != 1) throw NonIntegerCoefficient();
    return numerator(c);
  }

  IntSeries truncate(long order) const {
    if (order >= order_) return *this;
    IntSeries r = *this;
    r.order_ = order;
    if (r.val_ + static_cast<long>(r.coeffs_.size()) > order)
      r.coeffs_.resize(order > r.val_ ? order - r.val_ : 0);
    r.normalize();
    return r;
  }

  IntSeries shift(long k) const {  // multiply by x^k
    IntSeries r = *this;
    r.val_ += k;
    r.order_ += k;
    return r;
  }

  friend IntSeries operator+(const IntSeries& a, const IntSeries& b) {
    long order = std::min(a.order_, b.order_);
    long val = std::min(a.val_, b.val_);
    std::vector<Rat> c(order > val ? order - val : 0);
    for (long k = val; k < order; ++k) {
      Rat s = (k < a.order_ ? a.coeff(k) : Rat(0)) + (k < b.order_ ? b.coeff(k) : Rat(0));
      c[k - val] = std::move(s);
    }
    return IntSeries(val, std::move(c), order);
  }

  friend IntSeries operator-(const IntSeries& a) {
    IntSeries r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend IntSeries operator-(const IntSeries& a, const IntSeries& b) {
    return a + (-b);
  }

  friend IntSeries operator*(const IntSeries& a, const IntSeries& b) {
    if (a.is_zero() || b.is_zero())
      return IntSeries(std::min(a.order_ + b.val_, b.order_ + a.val_));
    long val = a.val_ + b.val_;
    long order = std::min(a.order_ + b.val_, b.order_ + a.val_);
    std::vector<Rat> c(order > val ? order - val : 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        long k = a.val_ + static_cast<long>(i) + b.val_ + static_cast<long>(j);
        if (k >= order) break;
        if (b.coeffs_[j] == 0) continue;
        c[k - val] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return IntSeries(val, std::move(c), order);
  }

  IntSeries scale(const Rat& s) const {
    IntSeries r = *this;
    for (auto& c : r.coeffs_) c *= s;
    r.normalize();
    return r;
  }

  // multiplicative inverse; valuation negates
  IntSeries inverse() const {
    if (is_zero()) throw DivisionByZeroSeries();
    long n = order_ - val_;  // relative precision
    // invert the unit part u = x^{-val} * this, then shift by -val
    std::vector<Rat> q(n);
    std::vector<Rat> r(n);
    for (long i = 0; i < n; ++i)
      r[i] = (i == 0) ? Rat(1) : Rat(0);
    for (long i = 0; i < n; ++i) {
      q[i] = r[i] / coeffs_[0];
      if (q[i] == 0) continue;
      for (long j = 0; j < n - i && j < static_cast<long>(coeffs_.size()); ++j)
        r[i + j] -= q[i] * coeffs_[j];
    }
    return IntSeries(-val_, std::move(q), -val_ + n);
  }

  friend IntSeries operator/(const IntSeries& a, const IntSeries& b) {
    return a * b.inverse();
  }

  // square root; needs even valuation and leading coefficient 1
  IntSeries sqrt() const {
    if (is_zero()) return IntSeries(order_ / 2);
    if (val_ % 2 != 0) throw OddValuation();
    if (coeffs_[0] != 1) throw NonUnitConstantTerm();
    long n = order_ - val_;
    std::vector<Rat> s(n);
    s[0] = 1;
    for (long k = 1; k < n; ++k) {
      Rat acc = (k < static_cast<long>(coeffs_.size())) ? coeffs_[k] : Rat(0);
      for (long i = 1; i < k; ++i) acc -= s[i] * s[k - i];
      s[k] = acc / 2;
    }
    return IntSeries(val_ / 2, std::move(s), val_ / 2 + n);
  }

  // composition this(f); f must have positive valuation
  IntSeries compose(const IntSeries& f) const {
    assert(val_ >= 0 && "composition needs an ordinary series");
    assert(f.is_zero() || f.val_ >= 1);
    long order = std::min(order_, f.order_);
    IntSeries r(order);
    IntSeries power = IntSeries::poly({1}, order);
    for (long k = 0; k < order_; ++k) {
      Rat c = coeff(k);
      if (c != 0) r = r + power.scale(c);
      if (power.is_zero() || power.val_ >= order) break;
      power = (power * f).truncate(order);
    }
    return r;
  }

  // compositional inverse g with f(g) = x; needs val 1, unit linear coefficient
  IntSeries reversion() const {
    assert(val_ == 1 && coeffs_[0] != 0);
    long order = order_;
    std::vector<Rat> g(order > 1 ? order - 1 : 0);
    if (!g.empty()) g[0] = Rat(1) / coeffs_[0];
    IntSeries cur(1, {g.empty() ? Rat(0) : g[0]}, order);
    for (long n = 2; n < order; ++n) {
      // adjust g[n] so [x^n] f(g) vanishes; only the linear term of f sees g[n]
      Rat bad = compose(cur).coeff(n);
      g[n - 1] = -bad / coeffs_[0];
      cur = IntSeries(1, std::vector<Rat>(g.begin(), g.begin() + n), order);
    }
    return IntSeries(1, std::move(g), order);
  }

  std::string str(const char* var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = val_; k < order_; ++k) {
      Rat c = coeff(k);
      if (c == 0) continue;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      Rat a = c > 0 ? c : Rat(-c);
      if (a != 1 || k == 0) os << a.str();
      if (k != 0) {
        if (a != 1) os << "*";
        os << var;
        if (k != 1) os << "^" << k;
      }
    }
    os << " + O(" << var << "^" << order_ << ")";
    return os.str();
  }

  std::string to_json() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (long k = val_; k < order_; ++k) {
      Rat c = coeff(k);
      if (c == 0) continue;
      if (!first) os << ',';
      first = false;
      os << "{\"pow\":" << k << ",\"coeff\":\"" << c.str() << "\"}";
    }
    os << ']';
    return os.str();
  }

  // equality of certified coefficients on the common order
  friend bool agree(const IntSeries& a, const IntSeries& b) {
    long order = std::min(a.order_, b.order_);
    long lo = std::min(a.val_, b.val_);
    for (long k = lo; k < order; ++k)
      if (a.coeff(k) != b.coeff(k)) return false;
    return true;
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
      val_ += static_cast<long>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) val_ = order_;
  }

  long val_;
  std::vector<Rat> coeffs_;
  long order_;
};

}  // namespace hexpath
