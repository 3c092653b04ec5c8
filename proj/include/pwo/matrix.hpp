#ifndef PWO_MATRIX_HPP
#define PWO_MATRIX_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pwo/error.hpp"
#include "pwo/permutation.hpp"

namespace pwo {

/// A 1-based (row, column) position. Row 1 is the top row.
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

inline bool shares_line(Cell a, Cell b) { return a.row == b.row || a.col == b.col; }

/// Dense r x s matrix over {-1, 0, +1}.
///
/// Either both dimensions are positive, or the matrix is 0 x 0 (only
/// produced by reducing a zero matrix).
class SignMatrix {
public:
  SignMatrix() = default;

  SignMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_shape();
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
  }

  SignMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> grid;
    for (const auto& r : rows) grid.emplace_back(r);
    *this = from_rows(grid);
  }

  static SignMatrix from_rows(const std::vector<std::vector<int>>& grid) {
    if (grid.empty()) return SignMatrix();
    const int r = static_cast<int>(grid.size());
    const int s = static_cast<int>(grid.front().size());
    SignMatrix m(r, s);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(grid[static_cast<std::size_t>(i)].size()) != s) {
        throw invalid_matrix_error("ragged matrix: row " + std::to_string(i + 1) + " has " +
                                   std::to_string(grid[static_cast<std::size_t>(i)].size()) +
                                   " entries, expected " + std::to_string(s));
      }
      for (int j = 0; j < s; ++j) m.set(i + 1, j + 1, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  int operator()(int i, int j) const { return entries_[index(i, j)]; }
  int at(Cell c) const { return (*this)(c.row, c.col); }

  void set(int i, int j, int value) {
    if (value < -1 || value > 1) {
      throw invalid_matrix_error("entry " + std::to_string(value) + " is not in {-1,0,1}");
    }
    entries_[index(i, j)] = static_cast<std::int8_t>(value);
  }

  /// Nonzero cells in row-major order.
  std::vector<Cell> support() const {
    std::vector<Cell> out;
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j)
        if ((*this)(i, j) != 0) out.push_back({i, j});
    return out;
  }

  int count(int value) const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), value));
  }

  std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> g(static_cast<std::size_t>(rows_));
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j) g[static_cast<std::size_t>(i - 1)].push_back((*this)(i, j));
    return g;
  }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

private:
  void check_shape() const {
    if (rows_ < 0 || cols_ < 0 || ((rows_ == 0) != (cols_ == 0))) {
      throw invalid_matrix_error("bad matrix shape " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_));
    }
  }

  std::size_t index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw bounds_error("cell (" + std::to_string(i) + "," + std::to_string(j) +
                         ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int8_t> entries_;
};

/// 0/1 matrix with at most one nonzero per row and per column, stored as
/// its support sorted by row.
class QuasiPermMatrix {
public:
  QuasiPermMatrix() = default;

  QuasiPermMatrix(int rows, int cols, std::vector<Cell> support)
      : rows_(rows), cols_(cols), support_(std::move(support)) {
    if (rows_ < 0 || cols_ < 0) throw invalid_matrix_error("negative matrix dimension");
    std::sort(support_.begin(), support_.end());
    std::vector<bool> row_used(static_cast<std::size_t>(rows_) + 1), col_used(static_cast<std::size_t>(cols_) + 1);
    for (const Cell& c : support_) {
      if (c.row < 1 || c.row > rows_ || c.col < 1 || c.col > cols_) {
        throw bounds_error("support cell " + to_string(c) + " outside " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
      }
      if (row_used[static_cast<std::size_t>(c.row)] || col_used[static_cast<std::size_t>(c.col)]) {
        throw invalid_matrix_error("two support cells share a line at " + to_string(c));
      }
      row_used[static_cast<std::size_t>(c.row)] = col_used[static_cast<std::size_t>(c.col)] = true;
    }
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const std::vector<Cell>& support() const noexcept { return support_; }

  int operator()(int i, int j) const {
    return std::binary_search(support_.begin(), support_.end(), Cell{i, j}) ? 1 : 0;
  }

  friend bool operator==(const QuasiPermMatrix&, const QuasiPermMatrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cell> support_;
};

inline QuasiPermMatrix perm_matrix(const Permutation& p) {
  std::vector<Cell> support;
  for (std::size_t i = 1; i <= p.size(); ++i) support.push_back({static_cast<int>(i), p(i)});
  const int n = static_cast<int>(p.size());
  return QuasiPermMatrix(n, n, std::move(support));
}

/// The permutation whose matrix is red(P); empty support gives the empty permutation.
inline Permutation matrix_perm(const QuasiPermMatrix& m) {
  if (m.support().empty()) return {};
  std::vector<int> cols;
  for (const Cell& c : m.support()) cols.push_back(c.col);
  return reduce(std::span<const int>(cols));
}

inline QuasiPermMatrix reduce_matrix(const QuasiPermMatrix& m) {
  const Permutation p = matrix_perm(m);
  return perm_matrix(p);
}

/// red(M): drop all-zero rows and columns.
inline SignMatrix reduce_matrix(const SignMatrix& m) {
  std::vector<int> keep_rows, keep_cols;
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      if (m(i, j) != 0) {
        keep_rows.push_back(i);
        break;
      }
    }
  }
  for (int j = 1; j <= m.cols(); ++j) {
    for (int i = 1; i <= m.rows(); ++i) {
      if (m(i, j) != 0) {
        keep_cols.push_back(j);
        break;
      }
    }
  }
  if (keep_rows.empty()) return SignMatrix();
  SignMatrix out(static_cast<int>(keep_rows.size()), static_cast<int>(keep_cols.size()));
  for (std::size_t a = 0; a < keep_rows.size(); ++a)
    for (std::size_t b = 0; b < keep_cols.size(); ++b)
      out.set(static_cast<int>(a + 1), static_cast<int>(b + 1), m(keep_rows[a], keep_cols[b]));
  return out;
}

/// Delta(X): the smallest 0/1 matrix with support X.
inline QuasiPermMatrix delta(const std::vector<Cell>& cells) {
  int r = 0, s = 0;
  for (const Cell& c : cells) {
    r = std::max(r, c.row);
    s = std::max(s, c.col);
  }
  return QuasiPermMatrix(r, s, cells);
}

/// Delta^(P)(X): a matrix of the given shape with support X.
inline QuasiPermMatrix delta(const std::vector<Cell>& cells, int rows, int cols) {
  return QuasiPermMatrix(rows, cols, cells);
}

inline SignMatrix transpose_matrix(const SignMatrix& m) {
  if (m.rows() == 0) return m;
  SignMatrix t(m.cols(), m.rows());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) t.set(j, i, m(i, j));
  return t;
}

inline QuasiPermMatrix transpose_matrix(const QuasiPermMatrix& m) {
  std::vector<Cell> support;
  for (const Cell& c : m.support()) support.push_back({c.col, c.row});
  return QuasiPermMatrix(m.cols(), m.rows(), std::move(support));
}

inline SignMatrix to_sign_matrix(const QuasiPermMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return SignMatrix();
  SignMatrix out(m.rows(), m.cols());
  for (const Cell& c : m.support()) out.set(c.row, c.col, 1);
  return out;
}

inline QuasiPermMatrix to_quasi_perm(const SignMatrix& m) {
  if (m.count(-1) > 0) throw invalid_matrix_error("matrix has -1 entries; not a 0/1 matrix");
  return QuasiPermMatrix(m.rows(), m.cols(), m.support());
}

/// Q <= P for dense sign matrices: some row/column-subset submatrix of P with
/// Q's shape agrees with Q on every nonzero entry of Q.
///
/// Column selections are enumerated depth-first in increasing order; after
/// each extension the rows are matched greedily (earliest feasible P row per
/// Q row), which decides feasibility for the chosen columns exactly.
inline bool matrix_contains(const SignMatrix& big, const SignMatrix& pattern) {
  const int pr = big.rows(), pc = big.cols();
  const int qr = pattern.rows(), qc = pattern.cols();
  if (qr == 0) return true;
  if (qr > pr || qc > pc) return false;

  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(qc));

  auto rows_fit = [&]() {
    const int t = static_cast<int>(chosen.size());
    int prev = 0;
    for (int i = 1; i <= qr; ++i) {
      int row = prev + 1;
      const int last = pr - (qr - i);
      for (; row <= last; ++row) {
        bool ok = true;
        for (int j = 1; j <= t && ok; ++j) {
          const int want = pattern(i, j);
          if (want != 0 && big(row, chosen[static_cast<std::size_t>(j - 1)]) != want) ok = false;
        }
        if (ok) break;
      }
      if (row > last) return false;
      prev = row;
    }
    return true;
  };

  // Iterative DFS over increasing column tuples.
  int next = 1;
  while (true) {
    const int t = static_cast<int>(chosen.size());
    const int last = pc - (qc - t - 1);
    bool advanced = false;
    for (int c = next; c <= last; ++c) {
      chosen.push_back(c);
      if (rows_fit()) {
        if (static_cast<int>(chosen.size()) == qc) return true;
        next = c + 1;
        advanced = true;
        break;
      }
      chosen.pop_back();
    }
    if (advanced) continue;
    if (chosen.empty()) return false;
    next = chosen.back() + 1;
    chosen.pop_back();
  }
}

/// Q <= P for quasi-permutation matrices, matched over supports.
///
/// Support points of Q are placed in row order onto support points of P; row
/// and column gaps between placed points must leave room for Q's interior
/// (possibly all-zero) lines.
inline bool matrix_contains(const QuasiPermMatrix& big, const QuasiPermMatrix& pattern) {
  if (pattern.rows() > big.rows() || pattern.cols() > big.cols()) return false;
  const auto& qs = pattern.support();
  const auto& ps = big.support();
  const int k = static_cast<int>(qs.size());
  if (k == 0) return true;
  if (k > static_cast<int>(ps.size())) return false;

  std::vector<int> left(static_cast<std::size_t>(k), -1), right(static_cast<std::size_t>(k), -1);
  for (int t = 0; t < k; ++t) {
    for (int u = 0; u < t; ++u) {
      if (qs[u].col < qs[t].col && (left[t] < 0 || qs[u].col > qs[left[t]].col)) left[t] = u;
      if (qs[u].col > qs[t].col && (right[t] < 0 || qs[u].col < qs[right[t]].col)) right[t] = u;
    }
  }

  const int np = static_cast<int>(ps.size());
  std::vector<int> pick(static_cast<std::size_t>(k), -1);
  int t = 0;
  int start = 0;
  while (true) {
    const Cell q = qs[static_cast<std::size_t>(t)];
    int row_lo = q.row;
    if (t > 0) row_lo = ps[pick[t - 1]].row + (q.row - qs[t - 1].row);
    const int row_hi = big.rows() - (pattern.rows() - q.row);
    int col_lo = q.col;
    int col_hi = big.cols() - (pattern.cols() - q.col);
    if (left[t] >= 0) col_lo = std::max(col_lo, ps[pick[left[t]]].col + (q.col - qs[left[t]].col));
    if (right[t] >= 0) col_hi = std::min(col_hi, ps[pick[right[t]]].col - (qs[right[t]].col - q.col));

    int found = -1;
    if (col_lo <= col_hi) {
      for (int i = start; i <= np - (k - t); ++i) {
        const Cell c = ps[static_cast<std::size_t>(i)];
        if (c.row > row_hi) break;
        if (c.row >= row_lo && c.col >= col_lo && c.col <= col_hi) {
          found = i;
          break;
        }
      }
    }
    if (found >= 0) {
      pick[t] = found;
      if (t + 1 == k) return true;
      ++t;
      start = found + 1;
    } else {
      if (t == 0) return false;
      --t;
      start = pick[t] + 1;
    }
  }
}

inline bool matrix_contains(const QuasiPermMatrix& big, const SignMatrix& pattern) {
  return matrix_contains(to_sign_matrix(big), pattern);
}

/// Replace each 1 by the 2x2 identity, each -1 by ((0,-1),(-1,0)) and each 0
/// by the 2x2 zero block.
inline SignMatrix double_matrix(const SignMatrix& m) {
  if (m.rows() == 0) return m;
  SignMatrix out(2 * m.rows(), 2 * m.cols());
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      const int r = 2 * i - 1, c = 2 * j - 1;
      if (m(i, j) == 1) {
        out.set(r, c, 1);
        out.set(r + 1, c + 1, 1);
      } else if (m(i, j) == -1) {
        out.set(r, c + 1, -1);
        out.set(r + 1, c, -1);
      }
    }
  }
  return out;
}

}  // namespace pwo

#endif  // PWO_MATRIX_HPP
