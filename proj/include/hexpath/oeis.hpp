#pragma once
// OEIS snapshots for the cited sequences, plus an offline-first b-file client.

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hexpath/bigint.hpp"

namespace hexpath {

struct OeisSnapshot {
  std::string id;
  std::vector<Int> terms;
  std::string source;  // "embedded" or "fetched"
};

// Compile-time snapshots of the sequences the toolkit cross-checks against.
inline const std::map<std::string, std::vector<long long>>& oeis_embedded() {
  static const std::map<std::string, std::vector<long long>> snaps = {
      // axis-path counts by width 4n
      {"A086871", {1, 2, 10, 58, 370, 2514, 17850, 130890, 983650, 7536418, 58648810, 462306266, 3683602130}},
      // total path counts at even width 2n
      {"A368773", {1, 1, 3, 7, 21, 53, 159, 419, 1257, 3401, 10203, 28095}},
      // axis-path counts by step count
      {"A346503", {1, 0, 0, 1, 1, 1, 3, 5, 7, 14, 26, 43, 79, 148, 264, 483}},
      // half the total kissing numbers
      {"A239204", {1, 4, 17, 76, 353, 1688, 8257, 41128, 207905, 1063932, 5501073, 28695252}},
      // peakless Motzkin counts
      {"A004148", {1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423}},
      // Narayana triangle rows, read by rows
      {"A001263", {1, 1, 1, 1, 3, 1, 1, 6, 6, 1, 1, 10, 20, 10, 1, 1, 15, 50, 50, 15, 1}},
  };
  return snaps;
}

inline std::optional<OeisSnapshot> oeis_lookup(const std::string& id) {
  auto it = oeis_embedded().find(id);
  if (it == oeis_embedded().end()) return std::nullopt;
  OeisSnapshot s{id, {}, "embedded"};
  for (long long v : it->second) s.terms.emplace_back(v);
  return s;
}

// Parse a b-file: lines "index value", '#' comments ignored.
inline std::vector<Int> parse_bfile(const std::string& text) {
  std::vector<Int> terms;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string idx, val;
    if (ls >> idx >> val) terms.emplace_back(val);
  }
  return terms;
}

inline std::string oeis_cache_dir() {
  if (const char* d = std::getenv("HEXPATH_CACHE_DIR")) return d;
  return "";
}

inline std::optional<std::string> read_cached_bfile(const std::string& id) {
  std::string dir = oeis_cache_dir();
  if (dir.empty()) return std::nullopt;
  std::ifstream in(dir + "/b" + id.substr(1) + ".txt");
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_cached_bfile(const std::string& id, const std::string& body) {
  std::string dir = oeis_cache_dir();
  if (dir.empty()) return;
  std::ofstream out(dir + "/b" + id.substr(1) + ".txt");
  out << body;
}

enum class OeisResult { Match, Mismatch, Unknown, NetworkFailure };

// Compare the first min(|computed|, |reference|, limit) terms.
inline OeisResult oeis_compare(const std::vector<Int>& computed,
                               const std::vector<Int>& reference, std::size_t limit) {
  std::size_t n = std::min({computed.size(), reference.size(), limit});
  if (n == 0) return OeisResult::Unknown;
  for (std::size_t i = 0; i < n; ++i)
    if (computed[i] != reference[i]) return OeisResult::Mismatch;
  return OeisResult::Match;
}

}  // namespace hexpath
