#ifndef PWO_PERMUTATION_HPP
#define PWO_PERMUTATION_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pwo/error.hpp"

namespace pwo {

/// Cap on the length of permutations enumerated exhaustively (n! candidates).
inline constexpr std::size_t default_exhaustive_bound = 9;

/// A permutation of {1..n} in one-line notation. Indexing is 1-based.
///
/// The empty permutation is a valid value; it is the identity of the direct
/// and skew sums.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    validate();
  }

  Permutation(std::initializer_list<int> values) : values_(values) {
    validate();
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// p(i) for 1 <= i <= n.
  int operator()(std::size_t i) const { return values_.at(i - 1); }

  const std::vector<int>& values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  Permutation inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
      inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i + 1);
    }
    return from_trusted(std::move(inv));
  }

  Permutation reverse() const {
    return from_trusted(std::vector<int>(values_.rbegin(), values_.rend()));
  }

  Permutation complement() const {
    const int n1 = static_cast<int>(values_.size()) + 1;
    std::vector<int> c(values_.size());
    std::transform(values_.begin(), values_.end(), c.begin(),
                   [n1](int v) { return n1 - v; });
    return from_trusted(std::move(c));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Skips validation; for values already known to be a bijection on 1..n.
  static Permutation from_trusted(std::vector<int> values) {
    Permutation p;
    p.values_ = std::move(values);
    return p;
  }

private:
  void validate() const {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || static_cast<std::size_t>(v) > values_.size() ||
          seen[static_cast<std::size_t>(v)]) {
        throw invalid_word_error("not a permutation of 1.." +
                                 std::to_string(values_.size()));
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<int> values_;
};

inline std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.values()[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_string(p);
}

/// Parses one-line notation. Entries are separated by spaces or commas; a
/// single run of digits such as "3142" is read one digit per entry.
inline Permutation parse_permutation(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);

  std::vector<int> values;
  auto all_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return c >= '0' && c <= '9';
    });
  };
  if (tokens.size() == 1 && tokens[0].size() > 1 && all_digits(tokens[0])) {
    for (char c : tokens[0]) values.push_back(c - '0');
  } else {
    for (const auto& tok : tokens) {
      if (!all_digits(tok)) throw parse_error("bad permutation entry '" + tok + "'");
      values.push_back(std::stoi(tok));
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const invalid_word_error& e) {
    throw parse_error(std::string("bad permutation '") + text + "': " + e.what());
  }
}

/// Rank-replacement of a word of distinct integers.
inline Permutation reduce(std::span<const int> word) {
  if (word.empty()) throw invalid_word_error("cannot reduce the empty word");
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]]) {
      throw invalid_word_error("word has duplicate letter " +
                               std::to_string(word[order[r]]));
    }
    ranks[order[r]] = static_cast<int>(r + 1);
  }
  return Permutation::from_trusted(std::move(ranks));
}

inline Permutation reduce(std::initializer_list<int> word) {
  return reduce(std::span<const int>(word.begin(), word.size()));
}

namespace detail {

// Rank-reduce a word already known to hold distinct letters; empty allowed.
inline Permutation reduce_distinct(const std::vector<int>& word) {
  if (word.empty()) return {};
  return reduce(std::span<const int>(word));
}

}  // namespace detail

/// q <= p: some subsequence of p reduces to q.
///
/// Backtracks over occurrence positions in the order of q. Each value is
/// confined to the window left by the already-placed neighbours of q(t) in
/// value order, with enough room for the values still to come.
inline bool contains(const Permutation& p, const Permutation& q) {
  const int n = static_cast<int>(p.size());
  const int k = static_cast<int>(q.size());
  if (k == 0) return true;
  if (k > n) return false;

  const auto& pv = p.values();
  const auto& qv = q.values();

  // For each t, the earlier index holding the nearest smaller / larger value.
  std::vector<int> below(static_cast<std::size_t>(k), -1), above(static_cast<std::size_t>(k), -1);
  for (int t = 0; t < k; ++t) {
    for (int u = 0; u < t; ++u) {
      if (qv[u] < qv[t] && (below[t] < 0 || qv[u] > qv[below[t]])) below[t] = u;
      if (qv[u] > qv[t] && (above[t] < 0 || qv[u] < qv[above[t]])) above[t] = u;
    }
  }

  std::vector<int> pos(static_cast<std::size_t>(k), -1);
  std::vector<int> val(static_cast<std::size_t>(k), 0);

  int t = 0;
  int start = 0;
  while (true) {
    int lo = qv[t];
    int hi = n - (k - qv[t]);
    if (below[t] >= 0) lo = std::max(lo, val[below[t]] + (qv[t] - qv[below[t]]));
    if (above[t] >= 0) hi = std::min(hi, val[above[t]] - (qv[above[t]] - qv[t]));

    int found = -1;
    const int last = n - (k - t);
    for (int i = start; i <= last && lo <= hi; ++i) {
      if (pv[i] >= lo && pv[i] <= hi) {
        found = i;
        break;
      }
    }
    if (found >= 0) {
      pos[t] = found;
      val[t] = pv[found];
      if (t + 1 == k) return true;
      ++t;
      start = found + 1;
    } else {
      if (t == 0) return false;
      --t;
      start = pos[t] + 1;
    }
  }
}

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  const int m = static_cast<int>(a.size());
  std::vector<int> v(a.values());
  for (int x : b) v.push_back(x + m);
  return Permutation::from_trusted(std::move(v));
}

inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
  const int n = static_cast<int>(b.size());
  std::vector<int> v;
  v.reserve(a.size() + b.size());
  for (int x : a) v.push_back(x + n);
  for (int x : b) v.push_back(x);
  return Permutation::from_trusted(std::move(v));
}

/// The images of p under the eight symmetries of the square, indexed by
/// bit 0 = inverse, bit 1 = reverse, bit 2 = complement (applied in that order).
inline std::array<Permutation, 8> square_symmetries(const Permutation& p) {
  std::array<Permutation, 8> out;
  for (unsigned code = 0; code < 8; ++code) {
    Permutation q = p;
    if (code & 1U) q = q.inverse();
    if (code & 2U) q = q.reverse();
    if (code & 4U) q = q.complement();
    out[code] = std::move(q);
  }
  return out;
}

/// The orbit of p under the symmetries of the square, sorted and deduplicated.
inline std::vector<Permutation> symmetries(const Permutation& p) {
  auto images = square_symmetries(p);
  std::vector<Permutation> out(images.begin(), images.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Inflates each point p(i) into an interval patterned by qs[i-1].
inline Permutation wreath(const Permutation& p, std::span<const Permutation> qs) {
  if (qs.size() != p.size()) {
    throw arity_error("wreath: " + std::to_string(p.size()) + " slots but " +
                      std::to_string(qs.size()) + " blocks");
  }
  for (const auto& q : qs) {
    if (q.empty()) throw domain_error("wreath: blocks must be nonempty");
  }
  // offset[v] = total size of blocks whose p-value is below v
  std::vector<int> block_size_by_value(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    block_size_by_value[static_cast<std::size_t>(p.values()[i])] =
        static_cast<int>(qs[i].size());
  }
  std::vector<int> offset(p.size() + 1, 0);
  for (std::size_t v = 2; v <= p.size(); ++v) {
    offset[v] = offset[v - 1] + block_size_by_value[v - 1];
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int base = offset[static_cast<std::size_t>(p.values()[i])];
    for (int x : qs[i]) out.push_back(base + x);
  }
  return Permutation::from_trusted(std::move(out));
}

inline Permutation wreath(const Permutation& p, std::initializer_list<Permutation> qs) {
  return wreath(p, std::span<const Permutation>(qs.begin(), qs.size()));
}

/// All nontrivial intervals as 1-based inclusive index ranges (i, j):
/// segments of length strictly between 1 and n whose values are consecutive.
inline std::vector<std::pair<int, int>> intervals(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(p.size());
  const auto& v = p.values();
  for (int i = 0; i < n; ++i) {
    int lo = v[i], hi = v[i];
    for (int j = i + 1; j < n; ++j) {
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
      if (j - i + 1 == n) break;
      if (hi - lo == j - i) out.emplace_back(i + 1, j + 1);
    }
  }
  return out;
}

inline bool is_simple(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  const auto& v = p.values();
  for (int i = 0; i < n; ++i) {
    int lo = v[i], hi = v[i];
    // segments starting at i of length 2..n-1
    for (int j = i + 1; j < n && j - i + 1 < n; ++j) {
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
      if (hi - lo == j - i) return false;
    }
  }
  return true;
}

/// Every permutation of length n in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n,
                                                 std::size_t bound = default_exhaustive_bound) {
  if (n > bound) {
    throw resource_error("exhaustive enumeration of S_" + std::to_string(n) +
                         " exceeds the length cap " + std::to_string(bound));
  }
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(Permutation::from_trusted(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// A(X) restricted to length n, lexicographically sorted.
inline std::vector<Permutation> avoiders(std::span<const Permutation> basis, std::size_t n,
                                         std::size_t bound = default_exhaustive_bound) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(n, bound)) {
    bool avoids = std::none_of(basis.begin(), basis.end(),
                               [&](const Permutation& x) { return contains(p, x); });
    if (avoids) out.push_back(std::move(p));
  }
  return out;
}

/// cl(X) restricted to lengths 1..n, lexicographically sorted.
inline std::vector<Permutation> closure_up_to(std::span<const Permutation> generators,
                                              std::size_t n,
                                              std::size_t bound = default_exhaustive_bound) {
  std::vector<Permutation> out;
  if (generators.empty()) return out;
  std::size_t longest = 0;
  for (const auto& g : generators) longest = std::max(longest, g.size());
  const std::size_t top = std::min(n, longest);
  for (std::size_t len = 1; len <= top; ++len) {
    for (auto& p : all_permutations(len, bound)) {
      bool inside = std::any_of(generators.begin(), generators.end(),
                                [&](const Permutation& g) { return contains(g, p); });
      if (inside) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class Completion { strong, sum_only };

namespace detail {

inline bool in_completion(const Permutation& p, const std::set<Permutation>& base,
                          Completion mode, std::map<Permutation, bool>& memo) {
  if (base.count(p)) return true;
  if (p.size() < 2) return false;
  if (auto it = memo.find(p); it != memo.end()) return it->second;

  const auto& v = p.values();
  const int n = static_cast<int>(v.size());
  bool result = false;
  int prefix_max = 0;
  int prefix_min = n + 1;
  for (int k = 1; k < n && !result; ++k) {
    prefix_max = std::max(prefix_max, v[k - 1]);
    prefix_min = std::min(prefix_min, v[k - 1]);
    const bool sum_split = prefix_max == k;
    const bool skew_split = mode == Completion::strong && prefix_min == n - k + 1;
    if (!sum_split && !skew_split) continue;
    std::vector<int> head(v.begin(), v.begin() + k);
    std::vector<int> tail(v.begin() + k, v.end());
    result = in_completion(detail::reduce_distinct(head), base, mode, memo) &&
             in_completion(detail::reduce_distinct(tail), base, mode, memo);
  }
  memo.emplace(p, result);
  return result;
}

}  // namespace detail

/// Membership in the strong completion of X (closure under finitely many
/// direct and skew sums), or in the sum completion when mode is sum_only.
inline bool in_strong_completion(const Permutation& p, std::span<const Permutation> base,
                                 Completion mode = Completion::strong) {
  for (const auto& x : base) {
    if (x.empty()) throw domain_error("completion base must not contain the empty permutation");
  }
  if (p.empty()) return false;
  std::set<Permutation> set(base.begin(), base.end());
  std::map<Permutation, bool> memo;
  return detail::in_completion(p, set, mode, memo);
}

/// d_k = 2,4,...,2k,1,3,...,2k-1
inline Permutation d_parallel(int k) {
  if (k < 1) throw domain_error("d_parallel: k must be at least 1");
  std::vector<int> v;
  for (int i = 1; i <= k; ++i) v.push_back(2 * i);
  for (int i = 1; i <= k; ++i) v.push_back(2 * i - 1);
  return Permutation::from_trusted(std::move(v));
}

/// z_1 = 3142, z_k = z_{k-1} wreath (3142, ..., 3142).
inline Permutation z_sequence(int k) {
  if (k < 1) throw domain_error("z_sequence: k must be at least 1");
  const Permutation base{3, 1, 4, 2};
  Permutation z = base;
  for (int i = 2; i <= k; ++i) {
    std::vector<Permutation> blocks(z.size(), base);
    z = wreath(z, blocks);
  }
  return z;
}

/// Reduction of the first 2k terms of 4,1,6,3,8,5,10,7,...
inline Permutation increasing_oscillation(int k) {
  if (k < 1) throw domain_error("increasing_oscillation: k must be at least 1");
  std::vector<int> w;
  for (int i = 1; i <= k; ++i) {
    w.push_back(2 * i + 2);
    w.push_back(2 * i - 1);
  }
  return reduce(std::span<const int>(w));
}

}  // namespace pwo

#endif  // PWO_PERMUTATION_HPP
