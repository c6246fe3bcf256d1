#pragma once
// SVG rendering: lattice path as true 60-degree circular arcs of radius 2,
// with the circles below an axis path drawn underneath.

#include <cmath>
#include <cstdio>
#include <string>

#include "hexpath/geometry.hpp"
#include "hexpath/path.hpp"

namespace hexpath {

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// Arc circle center offset (in lattice units) from the step's start vertex.
// Unbarred steps run clockwise around their circle, barred counterclockwise.
inline std::pair<int, int> arc_center_offset(Step s) {
  switch (s) {
    case Step::U: return {2, 0};
    case Step::F: return {1, -1};
    case Step::D: return {-1, -1};
    case Step::Ub: return {-1, 1};
    case Step::Fb: return {1, 1};
    default: return {2, 0};  // Db
  }
}

inline const char* arc_color(Step s) {
  switch (s) {
    case Step::U: return "#d62728";
    case Step::F: return "#2ca02c";
    case Step::D: return "#1f77b4";
    case Step::Ub: return "#ff7f0e";
    case Step::Fb: return "#9467bd";
    default: return "#17becf";
  }
}

}  // namespace detail

// Deterministic SVG 1.1 document. Lattice point (x, h) sits at real
// coordinates (x, h*sqrt(3)); the y axis is flipped for screen coordinates.
inline std::string render_svg(const PackingPath& p) {
  const double s3 = std::sqrt(3.0);
  const double margin = 3.0;
  int maxx = p.width(), maxh = 0;
  {
    int h = 0;
    for (Step s : p.steps()) {
      h += height_inc(s);
      if (h > maxh) maxh = h;
    }
  }
  double w = maxx + 2 * margin, ht = maxh * s3 + 2 * margin;
  auto X = [&](double x) { return x + margin; };
  auto Y = [&](double h) { return maxh * s3 + margin - h * s3; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
         detail::fmt(w) + " " + detail::fmt(ht) + "\">\n";
  // axes
  out += "<line x1=\"" + detail::fmt(X(0)) + "\" y1=\"" + detail::fmt(Y(0)) +
         "\" x2=\"" + detail::fmt(X(maxx > 0 ? maxx : 4)) + "\" y2=\"" + detail::fmt(Y(0)) +
         "\" stroke=\"#888888\" stroke-width=\"0.05\"/>\n";
  out += "<line x1=\"" + detail::fmt(X(0)) + "\" y1=\"" + detail::fmt(Y(0)) +
         "\" x2=\"" + detail::fmt(X(0)) + "\" y2=\"" + detail::fmt(Y(maxh > 0 ? maxh : 2)) +
         "\" stroke=\"#888888\" stroke-width=\"0.05\"/>\n";

  if (p.ends_on_axis()) {
    for (const CircleCenter& c : circles_below(p)) {
      out += "<circle cx=\"" + detail::fmt(X(c.x)) + "\" cy=\"" + detail::fmt(Y(c.h)) +
             "\" r=\"2\" fill=\"#e8e8e8\" stroke=\"#555555\" stroke-width=\"0.05\"/>\n";
    }
  }

  int x = 0, h = 0;
  for (Step s : p.steps()) {
    int nx = x + width_inc(s), nh = h + height_inc(s);
    // sweep flag: math-clockwise becomes screen sweep 0 after the y flip
    int sweep = is_barred(s) ? 1 : 0;
    out += "<path d=\"M " + detail::fmt(X(x)) + " " + detail::fmt(Y(h)) +
           " A 2 2 0 0 " + std::to_string(sweep) + " " + detail::fmt(X(nx)) + " " +
           detail::fmt(Y(nh)) + "\" fill=\"none\" stroke=\"" + detail::arc_color(s) +
           "\" stroke-width=\"0.12\"/>\n";
    x = nx;
    h = nh;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hexpath
