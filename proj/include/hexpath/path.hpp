#pragma once
// Six-arc step alphabet, the succession automaton, and validated packing paths.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hexpath {

enum class Step : std::uint8_t { U, F, D, Ub, Fb, Db };

inline constexpr std::array<Step, 6> kAllSteps = {Step::U,  Step::F,  Step::D,
                                                  Step::Ub, Step::Fb, Step::Db};

constexpr int width_inc(Step s) {
  return (s == Step::F || s == Step::Fb) ? 2 : 1;
}

constexpr int height_inc(Step s) {
  switch (s) {
    case Step::U:
    case Step::Ub: return 1;
    case Step::D:
    case Step::Db: return -1;
    default: return 0;
  }
}

constexpr bool is_barred(Step s) {
  return s == Step::Ub || s == Step::Fb || s == Step::Db;
}

constexpr std::string_view token_of(Step s) {
  switch (s) {
    case Step::U: return "U";
    case Step::F: return "F";
    case Step::D: return "D";
    case Step::Ub: return "Ub";
    case Step::Fb: return "Fb";
    default: return "Db";
  }
}

// Successors before the quarter-plane filter. The automaton is the inversion
// of the recurrence system; validated against every printed series coefficient.
inline const std::array<Step, 2>& raw_successors(Step prev) {
  static const std::array<std::array<Step, 2>, 6> table = {{
      {Step::Ub, Step::F},   // U
      {Step::D, Step::Fb},   // F
      {Step::U, Step::Db},   // D
      {Step::U, Step::Db},   // Ub
      {Step::Ub, Step::F},   // Fb
      {Step::D, Step::Fb},   // Db
  }};
  return table[static_cast<int>(prev)];
}

// prev = nullopt means "start of path".
inline std::vector<Step> step_successors(std::optional<Step> prev, int height) {
  std::vector<Step> out;
  if (!prev) {
    if (height == 0) out.push_back(Step::U);
    return out;
  }
  for (Step s : raw_successors(*prev))
    if (height + height_inc(s) >= 0) out.push_back(s);
  return out;
}

struct PathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownToken : PathError {
  std::size_t position;
  explicit UnknownToken(std::size_t pos)
      : PathError("unknown token at position " + std::to_string(pos)),
        position(pos) {}
};
struct IllegalStart : PathError {
  IllegalStart() : PathError("paths must start with U") {}
};
struct IllegalTransition : PathError {
  std::size_t position;
  IllegalTransition(std::size_t pos, Step prev, Step next)
      : PathError("illegal transition " + std::string(token_of(prev)) + " -> " +
                  std::string(token_of(next)) + " at position " +
                  std::to_string(pos)),
        position(pos) {}
};
struct QuarterPlaneViolation : PathError {
  std::size_t position;
  explicit QuarterPlaneViolation(std::size_t pos)
      : PathError("height below zero at position " + std::to_string(pos)),
        position(pos) {}
};

struct PathStats {
  int width = 0;
  int height = 0;
  int nbsteps = 0;
  bool ends_on_axis = true;
};

class PackingPath {
 public:
  PackingPath() = default;

  // Validates the whole sequence; throws on the first offending step.
  explicit PackingPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int h = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      Step s = steps_[i];
      if (i == 0) {
        if (s != Step::U) throw IllegalStart();
      } else {
        const auto& succ = raw_successors(steps_[i - 1]);
        if (s != succ[0] && s != succ[1])
          throw IllegalTransition(i, steps_[i - 1], s);
      }
      h += height_inc(s);
      if (h < 0) throw QuarterPlaneViolation(i);
      width_ += width_inc(s);
    }
    height_ = h;
  }

  const std::vector<Step>& steps() const { return steps_; }
  int width() const { return width_; }
  int height() const { return height_; }
  int nbsteps() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }

  bool ends_on_axis() const {
    return height_ == 0 && (steps_.empty() || steps_.back() == Step::D);
  }

  PathStats stats() const {
    return {width_, height_, nbsteps(), ends_on_axis()};
  }

  // Tangency points in integer coordinates; real position is (x, h*sqrt(3)).
  std::vector<std::pair<int, int>> vertices() const {
    std::vector<std::pair<int, int>> vs;
    vs.reserve(steps_.size() + 1);
    int x = 0, h = 0;
    vs.emplace_back(x, h);
    for (Step s : steps_) {
      x += width_inc(s);
      h += height_inc(s);
      vs.emplace_back(x, h);
    }
    return vs;
  }

  bool contains_factor(const std::vector<Step>& factor) const {
    if (factor.empty()) return true;
    if (factor.size() > steps_.size()) return false;
    for (std::size_t i = 0; i + factor.size() <= steps_.size(); ++i) {
      bool hit = true;
      for (std::size_t j = 0; j < factor.size(); ++j)
        if (steps_[i + j] != factor[j]) { hit = false; break; }
      if (hit) return true;
    }
    return false;
  }

  // Axis path avoiding the factors Ub Db and D U.
  bool is_inchworm() const {
    return ends_on_axis() && !contains_factor({Step::Ub, Step::Db}) &&
           !contains_factor({Step::D, Step::U});
  }

  std::string to_tokens() const {
    std::string out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (i) out += ' ';
      out += token_of(steps_[i]);
    }
    return out;
  }

  friend bool operator==(const PackingPath&, const PackingPath&) = default;

 private:
  std::vector<Step> steps_;
  int width_ = 0;
  int height_ = 0;
};

// Grammar: path := (token (sep token)*)? ; sep := "," | " "+ ; case-sensitive.
inline PackingPath parse_path(std::string_view text) {
  std::vector<Step> steps;
  std::size_t i = 0;
  std::size_t pos = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ',') { ++i; continue; }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != ',') ++j;
    std::string_view tok = text.substr(i, j - i);
    bool found = false;
    for (Step s : kAllSteps)
      if (tok == token_of(s)) { steps.push_back(s); found = true; break; }
    if (!found) throw UnknownToken(pos);
    ++pos;
    i = j;
  }
  return PackingPath(std::move(steps));
}

}  // namespace hexpath
