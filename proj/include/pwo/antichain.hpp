#ifndef PWO_ANTICHAIN_HPP
#define PWO_ANTICHAIN_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

#include "pwo/error.hpp"
#include "pwo/generator.hpp"
#include "pwo/matrix.hpp"
#include "pwo/permutation.hpp"

namespace pwo {

/// P_n for each n, from the single-cycle generator.
inline std::vector<QuasiPermMatrix> generate_antichain(const SignMatrix& m, const std::vector<std::size_t>& ns,
                                                       const GeneratorOptions& opts = {}) {
  std::vector<QuasiPermMatrix> out;
  out.reserve(ns.size());
  for (std::size_t n : ns) out.push_back(expand_endpoints(generate_pbar(m, n, opts)));
  return out;
}

/// Ordered pairs (i, j), i != j, with elements[i] <= elements[j].
struct AntichainReport {
  std::vector<std::pair<std::size_t, std::size_t>> comparable;

  bool is_antichain() const { return comparable.empty(); }
};

inline AntichainReport verify_antichain(const std::vector<QuasiPermMatrix>& elements, unsigned threads = 1) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (i != j && elements[i].support().size() <= elements[j].support().size()) pairs.emplace_back(i, j);

  std::vector<char> hit(pairs.size(), 0);
  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t k = first; k < pairs.size(); k += step)
      hit[k] = matrix_contains(elements[pairs[k].second], elements[pairs[k].first]) ? 1 : 0;
  };
  threads = std::max(1U, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  AntichainReport report;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (hit[k]) report.comparable.push_back(pairs[k]);
  return report;
}

/// w_k, of length 4k+7.
inline Permutation widderschin(int k) {
  if (k < 1) throw domain_error("widderschin needs k >= 1");
  std::vector<int> w;
  for (int i = 0; i < k; ++i) {
    w.push_back(4 * k + 4 - 2 * i);
    w.push_back(1 + 2 * i);
  }
  for (int x : {2 * k + 3, 2 * k + 1, 2 * k + 4, 2 * k + 5, 2 * k + 7, 2 * k + 2}) w.push_back(x);
  for (int i = 0; i < k - 1; ++i) {
    w.push_back(2 * k + 9 + 2 * i);
    w.push_back(2 * k - 2 * i);
  }
  for (int x : {4 * k + 6, 4 * k + 7, 2}) w.push_back(x);
  return Permutation(std::move(w));
}

/// (c+1)c^2 + 1: from this size on, P_n has a unique M-partition.
inline long long uniqueness_bound(int c) {
  if (c < 4 || c % 2 != 0) throw domain_error("cycle length must be even and >= 4");
  const long long cc = c;
  return (cc + 1) * cc * cc + 1;
}

}  // namespace pwo

#endif  // PWO_ANTICHAIN_HPP
