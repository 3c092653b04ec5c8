#ifndef PWO_PROFILE_HPP
#define PWO_PROFILE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pwo/error.hpp"
#include "pwo/matrix.hpp"
#include "pwo/permutation.hpp"

namespace pwo {

/// Cut multisets (I, J) of an M-partition, 1-based and anchored at 1 and n+1.
/// Row band k is [row_cuts[k-1], row_cuts[k]).
struct MPartition {
  std::vector<int> row_cuts;
  std::vector<int> col_cuts;

  friend bool operator==(const MPartition&, const MPartition&) = default;
  friend auto operator<=>(const MPartition&, const MPartition&) = default;
};

/// "I=[1,7,16] J=[1,7,16]"
inline std::string to_string(const MPartition& part) {
  auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s + "]";
  };
  return "I=" + list(part.row_cuts) + " J=" + list(part.col_cuts);
}

/// Limits on the partition search. Both are caps, not tuning knobs: exceeding
/// them raises resource_error.
struct SearchBudget {
  int max_free_cuts = 8;
  int max_n = 120;
};

namespace detail {

// A run of points (taken in order) is acceptable for a sign: 0 needs none,
// +1 increasing, -1 decreasing in the second coordinate.
inline bool run_fits(int sign, const std::vector<int>& seq) {
  if (sign == 0) return seq.empty();
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (sign == 1 && seq[i] <= seq[i - 1]) return false;
    if (sign == -1 && seq[i] >= seq[i - 1]) return false;
  }
  return true;
}

// Can `seq` be cut into consecutive pieces matching `signs` in order?
// Greedy longest-prefix is exact: any suffix of a monotone run is monotone.
inline bool segments_fit(const std::vector<int>& signs, const std::vector<int>& seq) {
  std::size_t at = 0;
  for (int sign : signs) {
    if (at == seq.size()) return true;
    if (sign == 0) continue;
    std::size_t end = at + 1;
    while (end < seq.size() &&
           ((sign == 1 && seq[end] > seq[end - 1]) || (sign == -1 && seq[end] < seq[end - 1]))) {
      ++end;
    }
    at = end;
  }
  return at == seq.size();
}

class PartitionSearch {
public:
  PartitionSearch(const QuasiPermMatrix& p, const SignMatrix& m, std::optional<std::size_t> limit)
      : p_(p), m_(m), limit_(limit) {
    col_to_row_.assign(static_cast<std::size_t>(p.cols()) + 2, 0);
    for (const Cell& c : p.support()) col_to_row_[static_cast<std::size_t>(c.col)] = c.row;
    rows_.assign(static_cast<std::size_t>(m.rows()) + 1, 1);
    cols_.assign(static_cast<std::size_t>(m.cols()) + 1, 1);
    rows_.back() = p.rows() + 1;
    cols_.back() = p.cols() + 1;
    band_.assign(static_cast<std::size_t>(p.rows()) + 2, 0);
  }

  std::vector<MPartition> run() {
    choose_row(1);
    return std::move(found_);
  }

private:
  bool done() const { return limit_ && found_.size() >= *limit_; }

  // Points of row band k (1-based) as a column-ordered sequence of rows,
  // checked against row k of M.
  bool row_band_ok(int k) const {
    const int lo = rows_[static_cast<std::size_t>(k - 1)];
    const int hi = rows_[static_cast<std::size_t>(k)];
    std::vector<int> seq;
    for (int c = 1; c <= p_.cols(); ++c) {
      const int r = col_to_row_[static_cast<std::size_t>(c)];
      if (r >= lo && r < hi) seq.push_back(r);
    }
    std::vector<int> signs;
    for (int j = 1; j <= m_.cols(); ++j) signs.push_back(m_(k, j));
    return segments_fit(signs, seq);
  }

  void choose_row(int k) {
    if (done()) return;
    const int r = m_.rows();
    if (k == r) {
      if (!row_band_ok(r)) return;
      for (int band = 1; band <= r; ++band)
        for (int row = rows_[static_cast<std::size_t>(band - 1)]; row < rows_[static_cast<std::size_t>(band)]; ++row)
          band_[static_cast<std::size_t>(row)] = band;
      choose_col(1);
      return;
    }
    for (int cut = rows_[static_cast<std::size_t>(k - 1)]; cut <= p_.rows() + 1; ++cut) {
      rows_[static_cast<std::size_t>(k)] = cut;
      // a band that fails only gets worse as it grows
      if (!row_band_ok(k)) break;
      choose_row(k + 1);
      if (done()) return;
    }
    rows_[static_cast<std::size_t>(k)] = p_.rows() + 1;
  }

  // Every block (k, l) in column band l is valid.
  bool col_band_ok(int l) const {
    const int lo = cols_[static_cast<std::size_t>(l - 1)];
    const int hi = cols_[static_cast<std::size_t>(l)];
    std::vector<int> last(static_cast<std::size_t>(m_.rows()) + 1, 0);
    for (int c = lo; c < hi; ++c) {
      const int row = col_to_row_[static_cast<std::size_t>(c)];
      if (row == 0) continue;
      const int k = band_[static_cast<std::size_t>(row)];
      const int sign = m_(k, l);
      if (sign == 0) return false;
      int& prev = last[static_cast<std::size_t>(k)];
      if (prev != 0) {
        if (sign == 1 && row <= prev) return false;
        if (sign == -1 && row >= prev) return false;
      }
      prev = row;
    }
    return true;
  }

  void choose_col(int l) {
    if (done()) return;
    const int s = m_.cols();
    if (l == s) {
      if (col_band_ok(s)) found_.push_back({rows_, cols_});
      return;
    }
    for (int cut = cols_[static_cast<std::size_t>(l - 1)]; cut <= p_.cols() + 1; ++cut) {
      cols_[static_cast<std::size_t>(l)] = cut;
      if (!col_band_ok(l)) break;
      choose_col(l + 1);
      if (done()) return;
    }
    cols_[static_cast<std::size_t>(l)] = p_.cols() + 1;
  }

  const QuasiPermMatrix& p_;
  const SignMatrix& m_;
  std::optional<std::size_t> limit_;
  std::vector<int> col_to_row_;
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<int> band_;
  std::vector<MPartition> found_;
};

inline void check_budget(const QuasiPermMatrix& p, const SignMatrix& m, const SearchBudget& budget) {
  if (m.rows() == 0) throw domain_error("profile matrix must be nonempty");
  const int free_cuts = (m.rows() - 1) + (m.cols() - 1);
  if (free_cuts > budget.max_free_cuts) {
    throw resource_error("partition search needs " + std::to_string(free_cuts) +
                         " free cuts; budget is " + std::to_string(budget.max_free_cuts));
  }
  const int n = std::max(p.rows(), p.cols());
  if (n > budget.max_n) {
    throw resource_error("partition search on size " + std::to_string(n) +
                         " exceeds budget " + std::to_string(budget.max_n));
  }
}

}  // namespace detail

/// Checks conditions (zero / increasing / decreasing) for every block of P
/// under the cuts. Empty blocks satisfy all three.
inline bool is_m_partition(const QuasiPermMatrix& p, const SignMatrix& m, const MPartition& part) {
  auto check_cuts = [](const std::vector<int>& cuts, int bands, int n, const char* name) {
    if (static_cast<int>(cuts.size()) != bands + 1) {
      throw arity_error(std::string(name) + " has " + std::to_string(cuts.size()) +
                        " cuts; expected " + std::to_string(bands + 1));
    }
    if (cuts.front() != 1 || cuts.back() != n + 1 || !std::is_sorted(cuts.begin(), cuts.end())) {
      throw arity_error(std::string(name) + " must be nondecreasing from 1 to " +
                        std::to_string(n + 1));
    }
  };
  if (m.rows() == 0) throw domain_error("profile matrix must be nonempty");
  check_cuts(part.row_cuts, m.rows(), p.rows(), "I");
  check_cuts(part.col_cuts, m.cols(), p.cols(), "J");

  auto band_of = [](const std::vector<int>& cuts, int x) {
    // last k with cuts[k-1] <= x
    return static_cast<int>(std::upper_bound(cuts.begin(), cuts.end(), x) - cuts.begin());
  };
  // Points come sorted by row, so each block's column sequence is read top-down.
  std::vector<std::vector<std::vector<int>>> blocks(
      static_cast<std::size_t>(m.rows()),
      std::vector<std::vector<int>>(static_cast<std::size_t>(m.cols())));
  for (const Cell& c : p.support()) {
    const int k = band_of(part.row_cuts, c.row);
    const int l = band_of(part.col_cuts, c.col);
    blocks[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)].push_back(c.col);
  }
  for (int k = 1; k <= m.rows(); ++k)
    for (int l = 1; l <= m.cols(); ++l)
      if (!detail::run_fits(m(k, l), blocks[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)])) return false;
  return true;
}

/// All M-partitions of P in lexicographic (I, then J) order, truncated at
/// `limit` when given. Uses limit = 2 to decide uniqueness.
inline std::vector<MPartition> enumerate_m_partitions(const QuasiPermMatrix& p, const SignMatrix& m,
                                                      std::optional<std::size_t> limit = std::nullopt,
                                                      const SearchBudget& budget = {}) {
  detail::check_budget(p, m, budget);
  if (limit && *limit == 0) return {};
  return detail::PartitionSearch(p, m, limit).run();
}

inline bool in_profile_class(const QuasiPermMatrix& p, const SignMatrix& m,
                             const SearchBudget& budget = {}) {
  return !enumerate_m_partitions(p, m, 1, budget).empty();
}

inline bool in_profile_class(const Permutation& p, const SignMatrix& m,
                             const SearchBudget& budget = {}) {
  return in_profile_class(perm_matrix(p), m, budget);
}

/// {p in S_n : p in Pr(M)}, lexicographically sorted. `threads` > 1 splits the
/// candidates across worker threads; the result does not depend on it.
inline std::vector<Permutation> enumerate_profile_class(const SignMatrix& m, std::size_t n,
                                                        unsigned threads = 1,
                                                        std::size_t bound = default_exhaustive_bound,
                                                        const SearchBudget& budget = {}) {
  const auto candidates = all_permutations(n, bound);
  std::vector<char> keep(candidates.size(), 0);
  threads = std::max(1U, threads);
  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t i = first; i < candidates.size(); i += step)
      keep[i] = in_profile_class(candidates[i], m, budget) ? 1 : 0;
  };
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(candidates[i]);
  return out;
}

/// W(v) = Pr(v^t): row bands alternate increasing/decreasing per v.
inline bool in_w_class(const QuasiPermMatrix& p, const std::vector<int>& v,
                       const SearchBudget& budget = {}) {
  if (v.empty()) throw domain_error("W(v) needs a nonempty vector");
  SignMatrix column(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 1 && v[i] != -1) throw domain_error("W(v) needs a +-1 vector");
    column.set(static_cast<int>(i + 1), 1, v[i]);
  }
  return in_profile_class(p, column, budget);
}

}  // namespace pwo

#endif  // PWO_PROFILE_HPP
