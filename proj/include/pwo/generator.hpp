#ifndef PWO_GENERATOR_HPP
#define PWO_GENERATOR_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pwo/error.hpp"
#include "pwo/graph.hpp"
#include "pwo/matrix.hpp"
#include "pwo/permutation.hpp"
#include "pwo/profile.hpp"

namespace pwo {

enum class Vertical { top, bottom };
enum class Horizontal { left, right };
enum class Axis { row, col };

struct Yearn {
  Vertical vertical = Vertical::bottom;
  Horizontal horizontal = Horizontal::right;

  friend bool operator==(const Yearn&, const Yearn&) = default;
};

inline std::string to_string(Yearn y) {
  return std::string(y.vertical == Vertical::top ? "top" : "bottom") + "-" +
         (y.horizontal == Horizontal::left ? "left" : "right");
}

inline Yearn parse_yearn(const std::string& text) {
  if (text == "top-left") return {Vertical::top, Horizontal::left};
  if (text == "top-right") return {Vertical::top, Horizontal::right};
  if (text == "bottom-left") return {Vertical::bottom, Horizontal::left};
  if (text == "bottom-right") return {Vertical::bottom, Horizontal::right};
  throw parse_error("unknown yearn '" + text + "'");
}

/// +1 cells yearn top-left or bottom-right; -1 cells top-right or bottom-left.
inline bool yearn_fits(Yearn y, int sign) {
  const bool diagonal = (y.vertical == Vertical::top) == (y.horizontal == Horizontal::left);
  return sign == 1 ? diagonal : (sign == -1 && !diagonal);
}

struct Batch {
  int number = 0;
  Cell cell;
  Yearn yearn;
  int row_rank = 0;
  int col_rank = 0;
};

struct GeneratorOptions {
  std::optional<Cell> start_cell;
  std::optional<Yearn> start_yearn;
  Axis first_step = Axis::row;
  bool auto_double = false;
};

/// Consecutive cells differ and share a line; no cell repeats the one two
/// steps back. Throws walk_error at the first offending index.
inline void validate_walk(const std::vector<Cell>& walk) {
  for (std::size_t i = 1; i < walk.size(); ++i) {
    if (walk[i] == walk[i - 1] || !shares_line(walk[i], walk[i - 1])) {
      throw walk_error("walk step " + std::to_string(i) + " " + to_string(walk[i - 1]) + " -> " +
                           to_string(walk[i]) + " does not move along a line",
                       i);
    }
    if (i >= 2 && walk[i] == walk[i - 2]) {
      throw walk_error("walk step " + std::to_string(i) + " returns to " + to_string(walk[i]), i);
    }
  }
}

/// Shared row copies the vertical side, shared column the horizontal side;
/// the other side follows from the sign of the new cell.
inline Yearn propagate_yearn(const Batch& prev, Cell next, int sign, std::size_t index = 0) {
  if (sign != 1 && sign != -1) throw domain_error("batch cell " + to_string(next) + " is zero in M");
  Yearn y;
  if (prev.cell.row == next.row) {
    y.vertical = prev.yearn.vertical;
    const bool top = y.vertical == Vertical::top;
    y.horizontal = (top == (sign == 1)) ? Horizontal::left : Horizontal::right;
  } else if (prev.cell.col == next.col) {
    y.horizontal = prev.yearn.horizontal;
    const bool left = y.horizontal == Horizontal::left;
    y.vertical = (left == (sign == 1)) ? Vertical::top : Vertical::bottom;
  } else {
    throw walk_error(to_string(prev.cell) + " and " + to_string(next) + " share no line", index);
  }
  return y;
}

/// Batches inserted so far into P-bar_n, with their M-cells and ranks.
class GeneratorState {
public:
  GeneratorState() = default;
  explicit GeneratorState(SignMatrix m, bool doubled = false) : matrix_(std::move(m)), doubled_(doubled) {}

  const SignMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<Batch>& batches() const noexcept { return batches_; }
  std::vector<Cell> walk() const {
    std::vector<Cell> out;
    for (const auto& b : batches_) out.push_back(b.cell);
    return out;
  }
  std::size_t size() const noexcept { return batches_.size(); }
  /// True when the matrix was replaced by its double to fix an odd -1 count.
  bool doubled() const noexcept { return doubled_; }

  /// One-line pattern of P-bar_n.
  Permutation pattern() const {
    std::vector<int> values(batches_.size());
    for (const auto& b : batches_) values[static_cast<std::size_t>(b.row_rank - 1)] = b.col_rank;
    return Permutation::from_trusted(std::move(values));
  }

  QuasiPermMatrix pbar() const { return perm_matrix(pattern()); }

  /// Places one batch on `cell` yearning toward `yearn`: the row slot is the
  /// extreme of the interval allowed by the batches in other M-rows, clipped
  /// by the previous batch when the two share an M-row; columns likewise.
  void insert(Cell cell, Yearn yearn) {
    const int sign = matrix_.at(cell);
    if (sign == 0) throw domain_error("batch cell " + to_string(cell) + " is zero in M");
    if (!yearn_fits(yearn, sign)) {
      throw domain_error("yearn " + to_string(yearn) + " does not fit sign " + std::to_string(sign) +
                         " at " + to_string(cell));
    }
    const int n = static_cast<int>(batches_.size());
    if (n == 0) {
      batches_.push_back({1, cell, yearn, 1, 1});
      return;
    }
    const Batch& prev = batches_.back();

    auto slot = [&](auto line, auto rank, bool shares, bool toward_low) {
      int lo = 0, hi = n;
      for (const auto& b : batches_) {
        if (line(b.cell) < line(cell)) lo = std::max(lo, rank(b));
        if (line(b.cell) > line(cell)) hi = std::min(hi, rank(b) - 1);
      }
      if (shares) {
        if (toward_low) lo = std::max(lo, rank(prev));
        else hi = std::min(hi, rank(prev) - 1);
      }
      if (lo > hi) {
        throw consistency_error("no room for batch " + std::to_string(n + 1) + " at " + to_string(cell));
      }
      return toward_low ? lo : hi;
    };
    const int rs = slot([](Cell c) { return c.row; }, [](const Batch& b) { return b.row_rank; },
                        prev.cell.row == cell.row, yearn.vertical == Vertical::top);
    const int cs = slot([](Cell c) { return c.col; }, [](const Batch& b) { return b.col_rank; },
                        prev.cell.col == cell.col, yearn.horizontal == Horizontal::left);
    for (auto& b : batches_) {
      if (b.row_rank > rs) ++b.row_rank;
      if (b.col_rank > cs) ++b.col_rank;
    }
    batches_.push_back({n + 1, cell, yearn, rs + 1, cs + 1});
  }

private:
  SignMatrix matrix_;
  std::vector<Batch> batches_;
  bool doubled_ = false;
};

inline GeneratorState insert_batch(GeneratorState state, Cell cell, Yearn yearn) {
  state.insert(cell, yearn);
  return state;
}

/// Rightward yearn: bottom-right on a +1 cell, top-right on a -1 cell.
inline Yearn default_yearn(int sign) {
  return sign == 1 ? Yearn{Vertical::bottom, Horizontal::right} : Yearn{Vertical::top, Horizontal::right};
}

/// The matrix a cycle walk runs on: M itself, or its double when `auto_double`
/// is set and M has an odd number of -1s.
inline SignMatrix effective_matrix(const SignMatrix& m, const GeneratorOptions& opts) {
  if (m.count(-1) % 2 == 0) return m;
  if (!opts.auto_double) {
    throw parity_error("M has " + std::to_string(m.count(-1)) +
                       " entries equal to -1; use double_matrix(M) or auto_double");
  }
  return double_matrix(m);
}

/// n cells going round the single cycle of G(M).
inline std::vector<Cell> compile_cycle_walk(const SignMatrix& m, std::size_t n, const GeneratorOptions& opts = {}) {
  const SignMatrix eff = effective_matrix(m, opts);
  const BipartiteGraph g = bipartite_graph(eff);
  const GraphShape shape = classify_graph(g);
  if (shape.kind != ShapeKind::single_cycle) {
    throw shape_error("G(M) is not a single cycle (" + describe(shape) + ")");
  }
  Cell at = opts.start_cell ? *opts.start_cell : g.edges.front();
  if (at.row < 1 || at.row > eff.rows() || at.col < 1 || at.col > eff.cols() || eff.at(at) == 0) {
    throw domain_error("start cell " + to_string(at) + " is not a nonzero entry");
  }
  std::vector<Cell> walk;
  bool by_row = opts.first_step == Axis::row;
  while (walk.size() < n) {
    walk.push_back(at);
    at = by_row ? detail::row_neighbour(g, at) : detail::col_neighbour(g, at);
    by_row = !by_row;
  }
  return walk;
}

/// Inserts one batch per walk cell. The first batch takes `first_yearn` or the
/// rightward default; later yearns propagate.
inline GeneratorState generate_from_walk(const SignMatrix& m, const std::vector<Cell>& walk,
                                         std::optional<Yearn> first_yearn = std::nullopt,
                                         bool doubled = false) {
  validate_walk(walk);
  GeneratorState state(m, doubled);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Cell cell = walk[i];
    if (cell.row < 1 || cell.row > m.rows() || cell.col < 1 || cell.col > m.cols()) {
      throw bounds_error("walk cell " + to_string(cell) + " outside M");
    }
    const int sign = m.at(cell);
    if (sign == 0) throw walk_error("walk cell " + to_string(cell) + " is zero in M", i);
    const Yearn y = i == 0 ? first_yearn.value_or(default_yearn(sign))
                           : propagate_yearn(state.batches().back(), cell, sign, i);
    state.insert(cell, y);
  }
  return state;
}

inline GeneratorState generate_pbar(const SignMatrix& m, std::size_t n, const GeneratorOptions& opts = {}) {
  const SignMatrix eff = effective_matrix(m, opts);
  const bool doubled = eff.rows() != m.rows();
  GeneratorOptions inner = opts;
  inner.auto_double = false;
  return generate_from_walk(eff, compile_cycle_walk(eff, n, inner), opts.start_yearn, doubled);
}

/// Points of P_n grouped by batch: the first and last batches become 2x2
/// blocks (identity on a +1 cell, anti-identity on a -1 cell), the rest one
/// point each.
inline std::vector<std::vector<Cell>> expand_endpoint_groups(const GeneratorState& state) {
  if (state.size() < 2) throw domain_error("endpoint expansion needs at least 2 batches");
  std::vector<std::vector<Cell>> groups;
  for (const auto& b : state.batches()) groups.push_back({Cell{b.row_rank, b.col_rank}});
  for (std::size_t idx : {std::size_t{0}, state.size() - 1}) {
    const Cell at = groups[idx].front();
    for (std::size_t k = 0; k < groups.size(); ++k) {
      if (k == idx) continue;
      for (Cell& c : groups[k]) {
        if (c.row > at.row) ++c.row;
        if (c.col > at.col) ++c.col;
      }
    }
    if (state.matrix().at(state.batches()[idx].cell) == 1) {
      groups[idx] = {at, Cell{at.row + 1, at.col + 1}};
    } else {
      groups[idx] = {Cell{at.row, at.col + 1}, Cell{at.row + 1, at.col}};
    }
  }
  return groups;
}

inline QuasiPermMatrix expand_endpoints(const GeneratorState& state) {
  std::vector<Cell> support;
  for (const auto& g : expand_endpoint_groups(state)) support.insert(support.end(), g.begin(), g.end());
  const int n = static_cast<int>(state.size()) + 2;
  return QuasiPermMatrix(n, n, std::move(support));
}

/// The M-partition of P_n read off the batch cells: row band k holds the
/// points whose batch lies in row k of M; columns likewise.
inline MPartition natural_partition(const GeneratorState& state) {
  const auto groups = expand_endpoint_groups(state);
  const SignMatrix& m = state.matrix();
  MPartition part;
  part.row_cuts.assign(static_cast<std::size_t>(m.rows()) + 1, 1);
  part.col_cuts.assign(static_cast<std::size_t>(m.cols()) + 1, 1);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const Cell cell = state.batches()[i].cell;
    const int weight = static_cast<int>(groups[i].size());
    for (int k = cell.row + 1; k <= m.rows() + 1; ++k) part.row_cuts[static_cast<std::size_t>(k - 1)] += weight;
    for (int l = cell.col + 1; l <= m.cols() + 1; ++l) part.col_cuts[static_cast<std::size_t>(l - 1)] += weight;
  }
  return part;
}

/// P_n with one of the two first-batch entries removed, reduced to a
/// permutation matrix. `which` picks the upper (0) or lower (1) entry.
inline QuasiPermMatrix drop_first_batch_entry(const GeneratorState& state, int which = 0) {
  if (which != 0 && which != 1) throw domain_error("which must be 0 or 1");
  const auto groups = expand_endpoint_groups(state);
  const Cell drop = groups.front()[static_cast<std::size_t>(which)];
  std::vector<Cell> support;
  for (const auto& g : groups)
    for (Cell c : g)
      if (c != drop) support.push_back(c);
  const int n = static_cast<int>(state.size()) + 2;
  return reduce_matrix(QuasiPermMatrix(n, n, std::move(support)));
}

}  // namespace pwo

#endif  // PWO_GENERATOR_HPP
