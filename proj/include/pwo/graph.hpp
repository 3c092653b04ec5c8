#ifndef PWO_GRAPH_HPP
#define PWO_GRAPH_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "pwo/matrix.hpp"

namespace pwo {

/// G(M): row vertices x_1..x_r, column vertices y_1..y_s, one edge per
/// nonzero cell. Edges are kept as cells in row-major order.
struct BipartiteGraph {
  int rows = 0;
  int cols = 0;
  std::vector<Cell> edges;

  int vertex_count() const { return rows + cols; }

  int row_degree(int i) const {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [i](Cell c) { return c.row == i; }));
  }
  int col_degree(int j) const {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [j](Cell c) { return c.col == j; }));
  }

  std::vector<Cell> row_edges(int i) const {
    std::vector<Cell> out;
    for (Cell c : edges)
      if (c.row == i) out.push_back(c);
    return out;
  }
  std::vector<Cell> col_edges(int j) const {
    std::vector<Cell> out;
    for (Cell c : edges)
      if (c.col == j) out.push_back(c);
    return out;
  }

  /// Connected components, counting isolated vertices.
  int component_count() const {
    // vertices 0..rows-1 are x_i, rows..rows+cols-1 are y_j
    const int n = vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (Cell c : edges) {
      const int a = c.row - 1, b = rows + c.col - 1;
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int components = 0;
    for (int v = 0; v < n; ++v) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      ++components;
      std::queue<int> todo;
      todo.push(v);
      seen[static_cast<std::size_t>(v)] = true;
      while (!todo.empty()) {
        const int u = todo.front();
        todo.pop();
        for (int w : adj[static_cast<std::size_t>(u)]) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            todo.push(w);
          }
        }
      }
    }
    return components;
  }

  /// Independent cycle count: edges - vertices + components.
  int cycle_rank() const {
    return static_cast<int>(edges.size()) - vertex_count() + component_count();
  }
};

inline BipartiteGraph bipartite_graph(const SignMatrix& m) {
  return BipartiteGraph{m.rows(), m.cols(), m.support()};
}

/// "x1-y2" lines, one per edge.
inline std::string edge_list(const BipartiteGraph& g) {
  std::string out;
  for (Cell c : g.edges) out += "x" + std::to_string(c.row) + "-y" + std::to_string(c.col) + "\n";
  return out;
}

enum class ShapeKind { forest, single_cycle, cycles_present };

struct GraphShape {
  ShapeKind kind = ShapeKind::forest;
  /// For single_cycle: the cycle's cells, starting at the least cell and
  /// stepping first to its row neighbour.
  std::vector<Cell> cycle;
  /// Independent cycle count (0 for a forest, 1 for a single cycle).
  int cycle_count = 0;

  int cycle_length() const { return static_cast<int>(cycle.size()); }
};

namespace detail {

inline Cell row_neighbour(const BipartiteGraph& g, Cell c) {
  for (Cell e : g.edges)
    if (e.row == c.row && e.col != c.col) return e;
  return c;
}

inline Cell col_neighbour(const BipartiteGraph& g, Cell c) {
  for (Cell e : g.edges)
    if (e.col == c.col && e.row != c.row) return e;
  return c;
}

}  // namespace detail

/// Forest iff acyclic. Single cycle iff the non-isolated part of G(M) is
/// exactly one cycle (every non-isolated vertex of degree 2, one cycle).
/// Anything else reports the independent cycle count.
inline GraphShape classify_graph(const BipartiteGraph& g) {
  GraphShape shape;
  shape.cycle_count = g.cycle_rank();
  if (shape.cycle_count == 0) {
    shape.kind = ShapeKind::forest;
    return shape;
  }
  bool all_degree_two = true;
  for (int i = 1; i <= g.rows && all_degree_two; ++i) {
    const int d = g.row_degree(i);
    if (d != 0 && d != 2) all_degree_two = false;
  }
  for (int j = 1; j <= g.cols && all_degree_two; ++j) {
    const int d = g.col_degree(j);
    if (d != 0 && d != 2) all_degree_two = false;
  }
  if (shape.cycle_count != 1 || !all_degree_two) {
    shape.kind = ShapeKind::cycles_present;
    return shape;
  }
  shape.kind = ShapeKind::single_cycle;
  const Cell first = *std::min_element(g.edges.begin(), g.edges.end());
  Cell at = first;
  bool by_row = true;
  do {
    shape.cycle.push_back(at);
    at = by_row ? detail::row_neighbour(g, at) : detail::col_neighbour(g, at);
    by_row = !by_row;
  } while (at != first);
  return shape;
}

inline GraphShape classify_graph(const SignMatrix& m) { return classify_graph(bipartite_graph(m)); }

/// Pr(M) is partially well-ordered iff G(M) is a forest.
inline bool is_pwo(const SignMatrix& m) {
  return classify_graph(bipartite_graph(m)).kind == ShapeKind::forest;
}

inline std::string describe(const GraphShape& shape) {
  switch (shape.kind) {
    case ShapeKind::forest:
      return "forest";
    case ShapeKind::single_cycle:
      return "single cycle, c=" + std::to_string(shape.cycle_length());
    case ShapeKind::cycles_present:
      break;
  }
  return "cycles present, count=" + std::to_string(shape.cycle_count);
}

/// A cycle through the hub row, seen from the hub: `near` and `far` are its
/// two hub cells (near has the smaller column) and `path` runs from far's
/// column back to near's column, excluding both hub cells.
struct Petal {
  Cell near;
  Cell far;
  std::vector<Cell> path;
};

/// Several cycles meeting in exactly one shared row vertex.
struct FlowerStructure {
  int hub_row = 0;
  std::vector<Petal> petals;  // ordered by near.col
};

/// Two cycles sharing exactly one cell. Each path runs from the shared
/// cell's row vertex to its column vertex; paths[0] is the "right" cycle
/// (the one reaching the larger column).
struct SharedEdgeStructure {
  Cell shared;
  std::array<std::vector<Cell>, 2> paths;
};

namespace detail {

// Alternating trail from `start` until it comes back to start's row.
inline std::optional<std::vector<Cell>> trail(const BipartiteGraph& g, Cell start, bool next_by_col,
                                              std::size_t limit) {
  std::vector<Cell> out{start};
  Cell at = start;
  bool by_col = next_by_col;
  while (out.size() <= limit) {
    const Cell nxt = by_col ? col_neighbour(g, at) : row_neighbour(g, at);
    if (nxt == at) return std::nullopt;
    out.push_back(nxt);
    at = nxt;
    by_col = !by_col;
    if (out.back().row == start.row) return out;
  }
  return std::nullopt;
}

}  // namespace detail

/// Detects a flower: one hub row whose removal leaves the cycles as disjoint
/// paths, every other non-isolated vertex of degree 2, at least two petals.
inline std::optional<FlowerStructure> find_flower(const SignMatrix& m) {
  const BipartiteGraph g = bipartite_graph(m);
  for (int hub = 1; hub <= g.rows; ++hub) {
    const int hub_degree = g.row_degree(hub);
    if (hub_degree < 4 || hub_degree % 2 != 0) continue;
    bool others_ok = true;
    for (int i = 1; i <= g.rows && others_ok; ++i) {
      if (i == hub) continue;
      const int d = g.row_degree(i);
      if (d != 0 && d != 2) others_ok = false;
    }
    for (int j = 1; j <= g.cols && others_ok; ++j) {
      const int d = g.col_degree(j);
      if (d != 0 && d != 2) others_ok = false;
    }
    if (!others_ok) continue;

    FlowerStructure flower;
    flower.hub_row = hub;
    std::vector<bool> used(static_cast<std::size_t>(g.cols) + 1, false);
    bool ok = true;
    for (Cell near : g.row_edges(hub)) {
      if (used[static_cast<std::size_t>(near.col)]) continue;
      // walk from near down its column until the trail returns to the hub row
      auto walked = detail::trail(g, near, true, g.edges.size());
      if (!walked || walked->back().row != hub) {
        ok = false;
        break;
      }
      Petal petal;
      const Cell end = walked->back();
      std::vector<Cell> inner(walked->begin() + 1, walked->end() - 1);
      if (end.col > near.col) {
        petal.near = near;
        petal.far = end;
        std::reverse(inner.begin(), inner.end());
      } else {
        petal.near = end;
        petal.far = near;
      }
      petal.path = std::move(inner);
      used[static_cast<std::size_t>(near.col)] = used[static_cast<std::size_t>(end.col)] = true;
      flower.petals.push_back(std::move(petal));
    }
    if (!ok || flower.petals.size() < 2) continue;
    if (static_cast<int>(flower.petals.size()) != g.cycle_rank()) continue;
    std::sort(flower.petals.begin(), flower.petals.end(),
              [](const Petal& a, const Petal& b) { return a.near.col < b.near.col; });
    return flower;
  }
  return std::nullopt;
}

/// Detects two cycles sharing a single cell (a theta graph with one edge as
/// the middle path).
inline std::optional<SharedEdgeStructure> find_shared_edge(const SignMatrix& m) {
  const BipartiteGraph g = bipartite_graph(m);
  if (g.cycle_rank() != 2) return std::nullopt;
  std::vector<int> deg3_rows, deg3_cols;
  for (int i = 1; i <= g.rows; ++i) {
    const int d = g.row_degree(i);
    if (d == 3) deg3_rows.push_back(i);
    else if (d != 0 && d != 2) return std::nullopt;
  }
  for (int j = 1; j <= g.cols; ++j) {
    const int d = g.col_degree(j);
    if (d == 3) deg3_cols.push_back(j);
    else if (d != 0 && d != 2) return std::nullopt;
  }
  if (deg3_rows.size() != 1 || deg3_cols.size() != 1) return std::nullopt;
  const Cell shared{deg3_rows[0], deg3_cols[0]};
  if (m.at(shared) == 0) return std::nullopt;

  SharedEdgeStructure out;
  out.shared = shared;
  std::size_t found = 0;
  for (Cell start : g.row_edges(shared.row)) {
    if (start == shared) continue;
    // from the shared row vertex: start, then along its column, alternating,
    // until a cell in the shared column is reached
    std::vector<Cell> path{start};
    Cell at = start;
    bool by_col = true;
    while (at.col != shared.col) {
      Cell nxt = by_col ? detail::col_neighbour(g, at) : detail::row_neighbour(g, at);
      if (nxt == at || path.size() > g.edges.size()) return std::nullopt;
      path.push_back(nxt);
      at = nxt;
      by_col = !by_col;
    }
    if (found >= 2) return std::nullopt;
    out.paths[found++] = std::move(path);
  }
  if (found != 2) return std::nullopt;
  auto max_col = [](const std::vector<Cell>& p) {
    int best = 0;
    for (Cell c : p) best = std::max(best, c.col);
    return best;
  };
  if (max_col(out.paths[1]) > max_col(out.paths[0]) ||
      (max_col(out.paths[1]) == max_col(out.paths[0]) && out.paths[1] > out.paths[0])) {
    std::swap(out.paths[0], out.paths[1]);
  }
  return out;
}

}  // namespace pwo

#endif  // PWO_GRAPH_HPP
