// Builds the antichain for the 2x2 cycle, prints a few elements with their
// partitions, and checks them against the Widderschin permutations.
#include <iostream>

#include "pwo/pwo.hpp"

int main() {
  const pwo::SignMatrix m{{1, -1}, {-1, 1}};
  std::cout << "M =\n" << pwo::format_matrix(m) << "G(M): " << pwo::describe(pwo::classify_graph(m)) << "\n\n";

  std::vector<pwo::QuasiPermMatrix> elements;
  for (int k = 1; k <= 4; ++k) {
    const auto n = static_cast<std::size_t>(4 * k + 5);
    const auto state = pwo::generate_pbar(m, n);
    const auto p = pwo::expand_endpoints(state);
    elements.push_back(p);

    const auto perm = pwo::matrix_perm(p);
    const auto w = pwo::widderschin(k);
    bool match = false;
    for (const auto& s : pwo::square_symmetries(perm)) match = match || s == w;

    std::cout << "P_" << n << " = " << perm << '\n'
              << "  partition " << pwo::to_string(pwo::natural_partition(state)) << '\n'
              << "  w_" << k << " = " << w << (match ? "  (a symmetry of P_n)" : "  (no symmetry matches)") << '\n';
  }

  const auto report = pwo::verify_antichain(elements);
  std::cout << "\nantichain: " << (report.is_antichain() ? "yes" : "no") << '\n';
  return report.is_antichain() ? 0 : 1;
}
