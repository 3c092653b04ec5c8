#ifndef PWO_SVG_HPP
#define PWO_SVG_HPP

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "pwo/error.hpp"
#include "pwo/generator.hpp"
#include "pwo/matrix.hpp"

namespace pwo {

/// Dot plot of a matrix support; arrows join points by index.
struct PlotSpec {
  int rows = 0;
  int cols = 0;
  std::vector<Cell> points;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  int cell_size = 16;
  int margin = 12;
  double dot_radius = 4.0;
};

inline PlotSpec plot_spec(const QuasiPermMatrix& m) {
  PlotSpec spec;
  spec.rows = m.rows();
  spec.cols = m.cols();
  spec.points = m.support();
  return spec;
}

/// P_n (or P-bar_n) with an arrow from each batch to the next. Arrows start
/// and end at the first point of each batch.
inline PlotSpec plot_spec(const GeneratorState& state, bool expand = true) {
  PlotSpec spec;
  std::vector<std::size_t> anchor;
  if (expand) {
    for (const auto& g : expand_endpoint_groups(state)) {
      anchor.push_back(spec.points.size());
      spec.points.insert(spec.points.end(), g.begin(), g.end());
    }
    spec.rows = spec.cols = static_cast<int>(state.size()) + 2;
  } else {
    for (const auto& b : state.batches()) {
      anchor.push_back(spec.points.size());
      spec.points.push_back({b.row_rank, b.col_rank});
    }
    spec.rows = spec.cols = static_cast<int>(state.size());
  }
  for (std::size_t i = 1; i < anchor.size(); ++i) spec.arrows.emplace_back(anchor[i - 1], anchor[i]);
  return spec;
}

namespace detail {

inline std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

/// Deterministic SVG: one <circle> per point (row 1 at the top), one <line>
/// with an arrowhead per arrow.
inline std::string plot_svg(const PlotSpec& spec) {
  for (const auto& [a, b] : spec.arrows) {
    if (a >= spec.points.size() || b >= spec.points.size()) throw domain_error("arrow refers to a missing point");
  }
  const int w = 2 * spec.margin + spec.cols * spec.cell_size;
  const int h = 2 * spec.margin + spec.rows * spec.cell_size;
  auto cx = [&](const Cell& c) { return spec.margin + (c.col - 0.5) * spec.cell_size; };
  auto cy = [&](const Cell& c) { return spec.margin + (c.row - 0.5) * spec.cell_size; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) + "\">\n";
  out += "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#555\"/></marker></defs>\n";
  out += "<rect x=\"" + std::to_string(spec.margin) + "\" y=\"" + std::to_string(spec.margin) + "\" width=\"" +
         std::to_string(spec.cols * spec.cell_size) + "\" height=\"" + std::to_string(spec.rows * spec.cell_size) +
         "\" fill=\"none\" stroke=\"#000\"/>\n";
  for (const auto& [a, b] : spec.arrows) {
    const Cell p = spec.points[a], q = spec.points[b];
    // stop short of the target dot
    const double dx = cx(q) - cx(p), dy = cy(q) - cy(p);
    const double len = std::hypot(dx, dy);
    const double scale = len > spec.dot_radius ? (len - spec.dot_radius) / len : 1.0;
    out += "<line x1=\"" + detail::fixed(cx(p)) + "\" y1=\"" + detail::fixed(cy(p)) + "\" x2=\"" +
           detail::fixed(cx(p) + dx * scale) + "\" y2=\"" + detail::fixed(cy(p) + dy * scale) +
           "\" stroke=\"#555\" stroke-width=\"1\" marker-end=\"url(#head)\"/>\n";
  }
  for (const Cell& c : spec.points) {
    out += "<circle cx=\"" + detail::fixed(cx(c)) + "\" cy=\"" + detail::fixed(cy(c)) + "\" r=\"" +
           detail::fixed(spec.dot_radius) + "\" fill=\"#000\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pwo

#endif  // PWO_SVG_HPP
