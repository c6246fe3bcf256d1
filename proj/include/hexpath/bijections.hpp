#pragma once
// Structure-preserving maps out of the axis-path class: 2-colored skew Dyck
// words, quasi-Motzkin words, and the circle-sequence maps for inchworms.

#include <stdexcept>
#include <string>
#include <vector>

#include "hexpath/geometry.hpp"
#include "hexpath/path.hpp"

namespace hexpath {

struct DecompositionFailure : std::runtime_error {
  explicit DecompositionFailure(const std::string& what) : std::runtime_error(what) {}
};

// ---- 2-colored skew Dyck words: tokens u, d, d2, l ----

enum class SkewTok : std::uint8_t { u, d, d2, l };

struct ColoredSkewDyckPath {
  std::vector<SkewTok> toks;

  // lattice walk: u rises, d/d2/l fall; self-avoidance forbids factors ul and lu
  bool valid() const {
    int h = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      SkewTok s = toks[i];
      if (s == SkewTok::u) {
        if (i > 0 && toks[i - 1] == SkewTok::l) return false;
        ++h;
      } else {
        if (s == SkewTok::l && i > 0 && toks[i - 1] == SkewTok::u) return false;
        --h;
      }
      if (h < 0) return false;
    }
    return h == 0;
  }

  int up_steps() const {
    int n = 0;
    for (SkewTok s : toks)
      if (s == SkewTok::u) ++n;
    return n;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (i) out += ' ';
      switch (toks[i]) {
        case SkewTok::u: out += 'u'; break;
        case SkewTok::d: out += 'd'; break;
        case SkewTok::d2: out += "d2"; break;
        case SkewTok::l: out += 'l'; break;
      }
    }
    return out;
  }

  friend auto operator<=>(const ColoredSkewDyckPath&, const ColoredSkewDyckPath&) = default;
};

// ---- quasi-Motzkin words: tokens u, d, f; every d is followed by an f and
// every f is preceded by d or f ----

enum class QmTok : std::uint8_t { u, d, f };

struct QMotzkinPath {
  std::vector<QmTok> toks;

  bool valid() const {
    int h = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      QmTok s = toks[i];
      if (s == QmTok::u) ++h;
      else if (s == QmTok::d) {
        --h;
        if (i + 1 >= toks.size() || toks[i + 1] != QmTok::f) return false;
      } else {
        if (i == 0 || toks[i - 1] == QmTok::u) return false;
      }
      if (h < 0) return false;
    }
    return h == 0;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (i) out += ' ';
      out += toks[i] == QmTok::u ? 'u' : toks[i] == QmTok::d ? 'd' : 'f';
    }
    return out;
  }

  friend auto operator<=>(const QMotzkinPath&, const QMotzkinPath&) = default;
};

namespace detail {

// p[i] == Ub just after an initial U (height 2). Returns (elevated factor Q,
// index j of the closing Db that drops the height from 2 to 1).
inline std::pair<std::vector<Step>, std::size_t> elevated_split(
    const std::vector<Step>& p, std::size_t i) {
  if (p[i] != Step::Ub) throw DecompositionFailure("expected Ub");
  int h = 2;
  std::size_t j = i + 1;
  while (true) {
    if (j >= p.size()) throw DecompositionFailure("unterminated elevated factor");
    h += height_inc(p[j]);
    if (h == 1) {
      if (p[j] != Step::Db) throw DecompositionFailure("elevated factor closed by non-Db");
      return {std::vector<Step>(p.begin() + i + 1, p.begin() + j), j};
    }
    ++j;
  }
}

inline std::vector<SkewTok> skew_rec(std::vector<Step> p) {
  if (p.empty()) return {};
  if (p[0] != Step::U) throw DecompositionFailure("axis factor must start with U");
  if (p.size() < 3) throw DecompositionFailure("axis factor too short");
  auto tail = [&](std::size_t from) {
    return std::vector<Step>(p.begin() + from, p.end());
  };
  if (p[1] == Step::F) {
    if (p[2] == Step::D) {  // U F D Q
      auto r = skew_rec(tail(3));
      r.insert(r.begin(), {SkewTok::u, SkewTok::d});
      return r;
    }
    if (p[2] != Step::Fb) throw DecompositionFailure("bad step after U F");
    // U F Fb Q  ->  u f(U Q) l
    std::vector<Step> q = tail(3);
    q.insert(q.begin(), Step::U);
    auto r = skew_rec(std::move(q));
    r.insert(r.begin(), SkewTok::u);
    r.push_back(SkewTok::l);
    return r;
  }
  if (p[1] != Step::Ub) throw DecompositionFailure("bad step after U");
  auto [Q, j] = elevated_split(p, 1);
  if (j + 1 >= p.size()) throw DecompositionFailure("nothing after elevated factor");
  Step nxt = p[j + 1];
  if (nxt == Step::D) {
    std::vector<Step> R = tail(j + 2);
    if (Q.empty()) {  // U Ub Db D Q  ->  u d2 f(Q)
      auto r = skew_rec(std::move(R));
      r.insert(r.begin(), {SkewTok::u, SkewTok::d2});
      return r;
    }
    // U Ub Q Db D R  ->  u f(Q) d f(R)
    auto rq = skew_rec(std::move(Q));
    auto rr = skew_rec(std::move(R));
    std::vector<SkewTok> r{SkewTok::u};
    r.insert(r.end(), rq.begin(), rq.end());
    r.push_back(SkewTok::d);
    r.insert(r.end(), rr.begin(), rr.end());
    return r;
  }
  if (nxt != Step::Fb) throw DecompositionFailure("bad step after Db");
  // U Ub Q Db Fb R  ->  u f(U R) d2 f(Q)
  std::vector<Step> R = tail(j + 2);
  R.insert(R.begin(), Step::U);
  auto rr = skew_rec(std::move(R));
  auto rq = skew_rec(std::move(Q));
  std::vector<SkewTok> r{SkewTok::u};
  r.insert(r.end(), rr.begin(), rr.end());
  r.push_back(SkewTok::d2);
  r.insert(r.end(), rq.begin(), rq.end());
  return r;
}

inline std::vector<QmTok> qm_rec(std::vector<Step> p) {
  if (p.empty()) return {};
  if (p[0] != Step::U) throw DecompositionFailure("axis factor must start with U");
  std::size_t i = 1;
  int k = 0;
  while (i + 1 < p.size() && p[i] == Step::F && p[i + 1] == Step::Fb) {
    ++k;
    i += 2;
  }
  if (i >= p.size()) throw DecompositionFailure("truncated axis factor");
  auto tail = [&](std::size_t from) {
    return std::vector<Step>(p.begin() + from, p.end());
  };
  auto append_ff_pairs = [&](std::vector<QmTok>& r) {
    for (int t = 0; t < 2 * k; ++t) r.push_back(QmTok::f);
  };
  if (p[i] == Step::F) {
    // U (F Fb)^k F D R  ->  u g(R) d f (ff)^k
    if (i + 1 >= p.size() || p[i + 1] != Step::D)
      throw DecompositionFailure("expected D after F");
    auto rr = qm_rec(tail(i + 2));
    std::vector<QmTok> r{QmTok::u};
    r.insert(r.end(), rr.begin(), rr.end());
    r.push_back(QmTok::d);
    r.push_back(QmTok::f);
    append_ff_pairs(r);
    return r;
  }
  if (p[i] != Step::Ub) throw DecompositionFailure("bad step in axis factor");
  auto [Q, j] = elevated_split(p, i);
  if (j + 1 >= p.size()) throw DecompositionFailure("nothing after elevated factor");
  Step nxt = p[j + 1];
  auto rq = qm_rec(std::move(Q));
  if (nxt == Step::D) {
    // U (F Fb)^k Ub Q Db D R  ->  u g(Q) d f f (ff)^k g(R)
    auto rr = qm_rec(tail(j + 2));
    std::vector<QmTok> r{QmTok::u};
    r.insert(r.end(), rq.begin(), rq.end());
    r.push_back(QmTok::d);
    r.push_back(QmTok::f);
    r.push_back(QmTok::f);
    append_ff_pairs(r);
    r.insert(r.end(), rr.begin(), rr.end());
    return r;
  }
  if (nxt != Step::Fb) throw DecompositionFailure("bad step after Db");
  // U (F Fb)^k Ub Q Db Fb S  ->  u g(Q) d f (ff)^k g(U S)
  std::vector<Step> S = tail(j + 2);
  S.insert(S.begin(), Step::U);
  auto rs = qm_rec(std::move(S));
  std::vector<QmTok> r{QmTok::u};
  r.insert(r.end(), rq.begin(), rq.end());
  r.push_back(QmTok::d);
  r.push_back(QmTok::f);
  append_ff_pairs(r);
  r.insert(r.end(), rs.begin(), rs.end());
  return r;
}

}  // namespace detail

inline ColoredSkewDyckPath to_skew_dyck(const PackingPath& p) {
  if (!p.ends_on_axis()) throw NotAxisPath();
  if (p.width() % 4 != 0) throw NotAxisPath();
  return {detail::skew_rec(p.steps())};
}

inline QMotzkinPath to_qmotzkin(const PackingPath& p) {
  if (!p.ends_on_axis()) throw NotAxisPath();
  return {detail::qm_rec(p.steps())};
}

// all 2-colored skew Dyck words with n up-steps
inline std::vector<ColoredSkewDyckPath> enumerate_skew_dyck(int n) {
  std::vector<ColoredSkewDyckPath> out;
  std::vector<SkewTok> w;
  auto rec = [&](auto&& self, int h, int ups) -> void {
    if (h == 0 && ups == n) out.push_back({w});
    if (ups < n && (w.empty() || w.back() != SkewTok::l)) {
      w.push_back(SkewTok::u);
      self(self, h + 1, ups + 1);
      w.pop_back();
    }
    if (h > 0) {
      for (SkewTok s : {SkewTok::d, SkewTok::d2, SkewTok::l}) {
        if (s == SkewTok::l && !w.empty() && w.back() == SkewTok::u) continue;
        w.push_back(s);
        self(self, h - 1, ups);
        w.pop_back();
      }
    }
  };
  rec(rec, 0, 0);
  return out;
}

// all quasi-Motzkin words with n tokens
inline std::vector<QMotzkinPath> enumerate_qmotzkin(int n) {
  std::vector<QMotzkinPath> out;
  std::vector<QmTok> w;
  auto rec = [&](auto&& self, int h) -> void {
    if (static_cast<int>(w.size()) == n) {
      if (h == 0 && (w.empty() || w.back() != QmTok::d)) out.push_back({w});
      return;
    }
    for (QmTok s : {QmTok::u, QmTok::d, QmTok::f}) {
      if (s == QmTok::d && h == 0) continue;
      if (s == QmTok::f && (w.empty() || w.back() == QmTok::u)) continue;
      if (!w.empty() && w.back() == QmTok::d && s != QmTok::f) continue;
      w.push_back(s);
      self(self, s == QmTok::d ? h - 1 : s == QmTok::u ? h + 1 : h);
      w.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// ---- inchworm circle sequences -> Dyck / peakless Motzkin ----

struct DyckPath {
  std::vector<bool> ups;  // true = U, false = D

  bool valid() const {
    int h = 0;
    for (bool u : ups) {
      h += u ? 1 : -1;
      if (h < 0) return false;
    }
    return h == 0;
  }

  int peaks() const {
    int n = 0;
    for (std::size_t i = 0; i + 1 < ups.size(); ++i)
      if (ups[i] && !ups[i + 1]) ++n;
    return n;
  }

  std::string str() const {
    std::string out;
    for (bool u : ups) out += u ? 'U' : 'D';
    return out;
  }

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
};

enum class MotzTok : std::uint8_t { U, F, D };

struct PeaklessMotzkinPath {
  std::vector<MotzTok> toks;

  bool valid() const {
    int h = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i] == MotzTok::U) {
        ++h;
        if (i + 1 < toks.size() && toks[i + 1] == MotzTok::D) return false;
      } else if (toks[i] == MotzTok::D) {
        --h;
      }
      if (h < 0) return false;
    }
    return h == 0;
  }

  std::string str() const {
    std::string out;
    for (MotzTok t : toks)
      out += t == MotzTok::U ? 'U' : t == MotzTok::F ? 'F' : 'D';
    return out;
  }

  friend auto operator<=>(const PeaklessMotzkinPath&, const PeaklessMotzkinPath&) = default;
};

using CircleSequence = std::vector<CircleCenter>;

inline CircleSequence path_to_circle_sequence(const PackingPath& p) {
  if (!p.is_inchworm()) throw NotInchworm();
  return first_touch_order(p);
}

namespace detail {

// first index i >= 1 with C[i] back on the base row, or 0 if none
inline std::size_t first_return(const CircleSequence& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i].h == c[0].h) return i;
  return 0;
}

}  // namespace detail

inline DyckPath inchworm_to_dyck(const CircleSequence& c) {
  std::vector<bool> out;
  auto rec = [&](auto&& self, CircleSequence cs) -> void {
    if (cs.empty()) return;
    if (cs.size() == 1 || cs[1].h == cs[0].h) {  // next circle on the same row
      out.push_back(true);
      out.push_back(false);
      self(self, CircleSequence(cs.begin() + 1, cs.end()));
      return;
    }
    if (cs[1].h != cs[0].h + 2) throw DecompositionFailure("circle rows must differ by 0 or 2");
    std::size_t k = detail::first_return(cs);
    if (k == 0) throw DecompositionFailure("no return to base row");
    out.push_back(true);
    self(self, CircleSequence(cs.begin() + 1, cs.begin() + k));
    out.push_back(false);
    self(self, CircleSequence(cs.begin() + k + 1, cs.end()));
  };
  rec(rec, c);
  return {out};
}

inline PeaklessMotzkinPath inchworm_to_peakless(const CircleSequence& c) {
  std::vector<MotzTok> out;
  auto rec = [&](auto&& self, CircleSequence cs) -> void {
    if (cs.empty()) return;
    if (cs.size() == 1 || cs[1].h == cs[0].h) {
      out.push_back(MotzTok::F);
      self(self, CircleSequence(cs.begin() + 1, cs.end()));
      return;
    }
    if (cs[1].h != cs[0].h + 2) throw DecompositionFailure("circle rows must differ by 0 or 2");
    std::size_t k = detail::first_return(cs);
    if (k == 0) throw DecompositionFailure("no return to base row");
    out.push_back(MotzTok::U);
    self(self, CircleSequence(cs.begin() + 1, cs.begin() + k));
    out.push_back(MotzTok::D);
    self(self, CircleSequence(cs.begin() + k + 1, cs.end()));
  };
  rec(rec, c);
  return {out};
}

}  // namespace hexpath
