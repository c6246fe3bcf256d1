// hexpath: counting, series, cross-checks, bijections, Riordan arrays,
// rendering, and OEIS comparisons for hexagonal packing paths.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hexpath/checks.hpp"
#include "hexpath/svg.hpp"

#include <httplib.h>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;
constexpr int kExitNetwork = 4;

int env_max_width() {
  if (const char* v = std::getenv("HEXPATH_MAX_WIDTH")) return std::atoi(v);
  return hexpath::kCounterBound;
}

int cmd_count(const std::string& stat, const std::string& by, int max,
              const std::string& format, bool brute) {
  using namespace hexpath;
  if (max > env_max_width()) {
    std::cerr << "bound exceeds HEXPATH_MAX_WIDTH\n";
    return kExitBound;
  }
  StatTable t;
  if (by == "height") {
    if (brute) {
      t = brute_stat_table(stat == "width" ? StatPair::WidthHeight : StatPair::StepsHeight, max);
    } else {
      t = stat == "width" ? width_height_table(max) : steps_height_table(max);
    }
  } else {
    if (stat != "width") {
      std::cerr << "statistic '" << by << "' is only tabulated by width\n";
      return kExitUsage;
    }
    if (brute) {
      StatPair p = by == "area" ? StatPair::WidthArea
                   : by == "kiss" ? StatPair::WidthKiss
                                  : StatPair::WidthKissInchworm;
      t = brute_stat_table(p, max);
    } else {
      AxisFlavor f = by == "area" ? AxisFlavor::Area
                     : by == "kiss" ? AxisFlavor::Kiss
                                    : AxisFlavor::InchwormKiss;
      AxisPolyTable polys = decomposition_polys(max - max % 4, f);
      t.statistic = "width";
      t.by = by;
      t.bound = max;
      for (const auto& [w, p] : polys.by_width)
        for (const auto& [j, v] : p) t.add(w, j, v);
    }
  }
  if (format == "csv") std::cout << t.to_csv();
  else if (format == "text") {
    for (const auto& [nk, v] : t.entries)
      std::cout << nk.first << ' ' << nk.second << ' ' << v << '\n';
  } else std::cout << t.to_json() << '\n';
  return kExitPass;
}

int cmd_series(const std::string& name, int order, int max_u, const std::string& format) {
  using namespace hexpath;
  auto emit = [&](const IntSeries& s) {
    if (format == "json") std::cout << s.to_json() << '\n';
    else std::cout << s.str() << '\n';
  };
  auto emit_upoly = [&](const UPoly& P) {
    if (format == "json") {
      std::cout << '{';
      bool first = true;
      for (const auto& [k, s] : P.by_power) {
        if (!first) std::cout << ',';
        first = false;
        std::cout << '"' << k << "\":" << s.to_json();
      }
      std::cout << "}\n";
    } else std::cout << P.str() << '\n';
  };
  if (name == "width-axis") emit(S2_x0(order));
  else if (name == "width-total") emit(S2_x1(order));
  else if (name == "width-bivariate") emit_upoly(S2_xu(order, max_u));
  else if (name == "steps-axis") emit(S3_x0(order));
  else if (name == "steps-total") emit(S3_x1(order));
  else if (name == "steps-bivariate") emit_upoly(S3_xu(order, max_u));
  else if (name == "root-width") emit(r_width(order));
  else if (name == "root-steps") emit(r_steps(order));
  else if (name == "kiss-totals") emit(kiss_gf_at_x1(order));
  else if (name == "inchworm-totals") emit(inchworm_gf_at_x1(order));
  else {
    std::cerr << "unknown series name\n";
    return kExitUsage;
  }
  return kExitPass;
}

int cmd_crosscheck(const std::string& suite, bool slow) {
  auto results = hexpath::run_suite(suite, slow);
  if (results.empty()) {
    std::cerr << "unknown suite\n";
    return kExitUsage;
  }
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.ok ? "pass" : "FAIL") << "  " << r.name;
    if (!r.ok) std::cout << "  [" << r.detail << "]";
    std::cout << '\n';
    all_ok = all_ok && r.ok;
  }
  return all_ok ? kExitPass : kExitMismatch;
}

int cmd_biject(const std::string& map, const std::string& tokens) {
  using namespace hexpath;
  PackingPath p = parse_path(tokens);
  if (map == "skew") std::cout << to_skew_dyck(p).str() << '\n';
  else if (map == "qmotzkin") std::cout << to_qmotzkin(p).str() << '\n';
  else if (map == "dyck") std::cout << inchworm_to_dyck(path_to_circle_sequence(p)).str() << '\n';
  else if (map == "peakless")
    std::cout << inchworm_to_peakless(path_to_circle_sequence(p)).str() << '\n';
  else if (map == "circles") {
    for (const auto& c : path_to_circle_sequence(p))
      std::cout << '(' << c.x << ',' << c.h << ") ";
    std::cout << '\n';
  } else {
    std::cerr << "unknown map\n";
    return kExitUsage;
  }
  return kExitPass;
}

int cmd_riordan(const std::string& array, int size, bool from_pair, bool inverse,
                bool az, const std::string& format) {
  using namespace hexpath;
  CountArray which;
  if (array == "Se2") which = CountArray::Se2;
  else if (array == "So2") which = CountArray::So2;
  else if (array == "Se3") which = CountArray::Se3;
  else if (array == "So3") which = CountArray::So3;
  else {
    std::cerr << "unknown array (want Se2|So2|Se3|So3)\n";
    return kExitUsage;
  }
  RiordanMatrix M = from_pair || inverse || az ? pair_matrix(which, size)
                                               : RiordanMatrix::from_counts(which, size);
  if (inverse) M = M.inverse();
  if (az) {
    auto a = a_sequence(M, size - 1);
    auto z = z_sequence(M, size - 1);
    std::cout << "A:";
    for (const auto& v : a) std::cout << ' ' << v;
    std::cout << "\nZ:";
    for (const auto& v : z) std::cout << ' ' << v;
    std::cout << '\n';
    return kExitPass;
  }
  if (format == "json") {
    std::cout << '[';
    for (int n = 0; n < size; ++n) {
      if (n) std::cout << ',';
      std::cout << '[';
      for (int k = 0; k < size; ++k) {
        if (k) std::cout << ',';
        std::cout << '"' << M.at(n, k).str() << '"';
      }
      std::cout << ']';
    }
    std::cout << "]\n";
  } else std::cout << M.to_csv();
  return kExitPass;
}

int cmd_render(const std::string& tokens, const std::string& out) {
  using namespace hexpath;
  std::string svg = render_svg(parse_path(tokens));
  if (out.empty() || out == "-") std::cout << svg;
  else {
    std::ofstream f(out, std::ios::binary);
    f << svg;
  }
  return kExitPass;
}

std::vector<hexpath::Int> computed_terms(const std::string& id, int n) {
  using namespace hexpath;
  std::vector<Int> t;
  if (id == "A086871") for (int i = 0; i < n; ++i) t.push_back(axis_width_closed(i));
  else if (id == "A346503") for (int i = 0; i < n; ++i) t.push_back(axis_steps_closed(i));
  else if (id == "A368773") {
    StatTable dp = width_height_table(2 * n);
    for (int i = 0; i < n; ++i) t.push_back(dp.row_total(2 * i));
  } else if (id == "A239204") {
    for (int i = 1; i <= n; ++i) t.push_back((schroder_r(i + 1) - schroder_r(i)) / 4);
  } else if (id == "A004148") {
    IntSeries s = inchworm_gf_at_x1(n + 1);
    for (int i = 0; i < n; ++i) t.push_back(s.coeff_int(i));
  } else if (id == "A001263") {
    for (int nn = 1; static_cast<int>(t.size()) < n; ++nn)
      for (int k = 1; k <= nn && static_cast<int>(t.size()) < n; ++k)
        t.push_back(narayana(nn, k));
  }
  return t;
}

int cmd_oeis(const std::string& id, int terms, bool online) {
  using namespace hexpath;
  std::vector<Int> reference;
  std::string source;
  if (online) {
    std::string body;
    if (auto cached = read_cached_bfile(id)) {
      body = *cached;
      source = "cached";
    } else {
      httplib::Client cli("http://oeis.org");
      cli.set_follow_location(true);
      auto res = cli.Get("/" + id + "/b" + id.substr(1) + ".txt");
      if (res && res->status == 200) {
        body = res->body;
        write_cached_bfile(id, body);
        source = "fetched";
      }
    }
    if (!body.empty()) {
      reference = parse_bfile(body);
    } else if (auto snap = oeis_lookup(id)) {
      std::cerr << "fetch failed, falling back to embedded snapshot\n";
      reference = snap->terms;
      source = "embedded";
    } else {
      std::cerr << "fetch failed and no embedded snapshot for " << id << '\n';
      return kExitNetwork;
    }
  } else {
    auto snap = oeis_lookup(id);
    if (!snap) {
      std::cerr << "no embedded snapshot for " << id << " (use --online)\n";
      return kExitUsage;
    }
    reference = snap->terms;
    source = "embedded";
  }
  std::vector<Int> computed = computed_terms(id, terms);
  if (computed.empty()) {
    std::cerr << "no computed-terms recipe for " << id << '\n';
    return kExitUsage;
  }
  std::size_t n = std::min({computed.size(), reference.size(), static_cast<std::size_t>(terms)});
  OeisResult r = oeis_compare(computed, reference, n);
  std::cout << id << " (" << source << "): compared " << n << " terms: "
            << (r == OeisResult::Match ? "match" : "MISMATCH") << '\n';
  return r == OeisResult::Match ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hexagonal packing path toolkit"};
  app.require_subcommand(1);

  std::string stat = "width", by = "height", format = "json";
  int max = 12;
  bool brute = false;
  auto* count = app.add_subcommand("count", "tabulate path counts");
  count->add_option("--stat", stat)->check(CLI::IsMember({"width", "steps"}));
  count->add_option("--by", by)->check(CLI::IsMember({"height", "area", "kiss", "kiss-inchworm"}));
  count->add_option("--max", max);
  count->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  count->add_flag("--brute", brute, "enumerate instead of DP");

  std::string sname = "width-axis";
  int order = 16, max_u = 8;
  auto* series = app.add_subcommand("series", "expand a generating function");
  series->add_option("--name", sname);
  series->add_option("--order", order);
  series->add_option("--max-u", max_u);
  series->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string suite = "all";
  bool slow = false;
  auto* cross = app.add_subcommand("crosscheck", "run agreement suites");
  cross->add_option("--suite", suite)
      ->check(CLI::IsMember({"height", "area", "kiss", "bijections", "riordan", "closedforms", "all"}));
  cross->add_flag("--slow", slow, "include the asymptotic suite");

  std::string map = "skew", tokens;
  auto* biject = app.add_subcommand("biject", "map a path to its image object");
  biject->add_option("--map", map);
  biject->add_option("--path", tokens);

  std::string array = "Se2";
  int size = 7;
  bool from_pair = false, inverse = false, az = false;
  auto* riordan = app.add_subcommand("riordan", "emit a Riordan array");
  riordan->add_option("--array", array);
  riordan->add_option("--size", size);
  riordan->add_flag("--from-pair", from_pair, "build from the (g,f) pair");
  riordan->add_flag("--inverse", inverse);
  riordan->add_flag("--az", az, "print the A- and Z-sequences");
  riordan->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  std::string out;
  auto* render = app.add_subcommand("render", "emit an SVG drawing");
  render->add_option("--path", tokens);
  render->add_option("--out", out);

  std::string id = "A086871";
  int terms = 7;
  bool online = false;
  auto* oeis = app.add_subcommand("oeis", "compare computed terms against a sequence");
  oeis->add_option("--id", id);
  oeis->add_option("--terms", terms);
  oeis->add_flag("--online", online);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(stat, by, max, format, brute);
    if (series->parsed()) return cmd_series(sname, order, max_u, format);
    if (cross->parsed()) return cmd_crosscheck(suite, slow);
    if (biject->parsed()) return cmd_biject(map, tokens);
    if (riordan->parsed()) return cmd_riordan(array, size, from_pair, inverse, az, format);
    if (render->parsed()) return cmd_render(tokens, out);
    if (oeis->parsed()) return cmd_oeis(id, terms, online);
  } catch (const hexpath::BoundExceeded& e) {
    std::cerr << e.what() << '\n';
    return kExitBound;
  } catch (const hexpath::LimitTooLarge& e) {
    std::cerr << e.what() << '\n';
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
