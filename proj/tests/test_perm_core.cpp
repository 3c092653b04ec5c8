#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pwo/permutation.hpp"

using pwo::Permutation;

namespace {

std::vector<int> ints(std::initializer_list<int> v) { return v; }

}  // namespace

TEST_CASE("reduce replaces letters by ranks", "[perm_core]") {
  CHECK(pwo::reduce({5, 3, 8}) == Permutation{2, 1, 3});
  CHECK(pwo::reduce({1, 2, 3}) == Permutation{1, 2, 3});
  CHECK(pwo::reduce({4, 1, 6, 3}) == Permutation{3, 1, 4, 2});
  CHECK_THROWS_AS(pwo::reduce({2, 2}), pwo::invalid_word_error);
  CHECK_THROWS_AS(pwo::reduce(std::span<const int>{}), pwo::invalid_word_error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int t = 0; t < 200; ++t) {
    std::set<int> letters;
    while (letters.size() < 7) letters.insert(d(rng));
    std::vector<int> w(letters.begin(), letters.end());
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(pwo::reduce(std::span<const int>(w)).values() == oracle::sort_rank(w));
  }
}

TEST_CASE("reduce is idempotent on permutations", "[perm_core]") {
  for (const auto& p : oracle::perms_up_to(6)) CHECK(pwo::reduce(std::span<const int>(p.values())) == p);
}

TEST_CASE("permutations validate and parse", "[perm_core]") {
  CHECK_THROWS_AS(Permutation({1, 1}), pwo::invalid_word_error);
  CHECK_THROWS_AS(Permutation({0, 1}), pwo::invalid_word_error);
  CHECK(pwo::parse_permutation("3 1 4 2") == Permutation{3, 1, 4, 2});
  CHECK(pwo::parse_permutation("3,1,4,2") == Permutation{3, 1, 4, 2});
  CHECK(pwo::parse_permutation("3142") == Permutation{3, 1, 4, 2});
  CHECK(pwo::parse_permutation("11 1 2 9 3 8 7 5 10 6 12 4").size() == 12);
  CHECK_THROWS_AS(pwo::parse_permutation("3 x 1"), pwo::parse_error);
  CHECK(pwo::to_string(Permutation{3, 1, 4, 2}) == "3 1 4 2");
}

TEST_CASE("contains", "[perm_core]") {
  CHECK(pwo::contains(Permutation{3, 5, 1, 4, 2}, Permutation{3, 1, 4, 2}));
  CHECK_FALSE(pwo::contains(Permutation{1, 2, 3}, Permutation{2, 1}));
  CHECK(pwo::contains(Permutation{2, 4, 1, 3}, Permutation{2, 4, 1, 3}));
  CHECK(pwo::contains(Permutation{2, 1}, Permutation{}));
}

TEST_CASE("contains agrees with subset enumeration", "[perm_core]") {
  const auto small = oracle::perms_up_to(4);
  for (const auto& p : oracle::perms_up_to(5))
    for (const auto& q : small)
      if (q.size() <= p.size()) CHECK(pwo::contains(p, q) == oracle::contains(p, q));
}

TEST_CASE("containment is a partial order", "[perm_core]") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 7; ++n)
    for (int t = 0; t < 20; ++t) {
      const auto p = oracle::random_perm(rng, n);
      CHECK(pwo::contains(p, p));
    }
  const auto all = oracle::perms_up_to(5);
  for (const auto& p : all)
    for (const auto& q : all)
      if (pwo::contains(p, q) && pwo::contains(q, p)) CHECK(p == q);
  // transitivity over every triple
  std::vector<std::vector<char>> le(all.size(), std::vector<char>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) le[i][j] = pwo::contains(all[i], all[j]);
  int chains = 0, broken = 0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (!le[a][b]) continue;
      for (std::size_t c = 0; c < all.size(); ++c)
        if (le[b][c]) {
          ++chains;
          broken += !le[a][c];
        }
    }
  CHECK(broken == 0);
  CHECK(chains > 1000);
}

TEST_CASE("containment is symmetry equivariant", "[perm_core]") {
  const auto all = oracle::perms_up_to(5);
  for (const auto& p : all)
    for (const auto& q : oracle::perms_up_to(3)) {
      const auto sp = pwo::square_symmetries(p);
      const auto sq = pwo::square_symmetries(q);
      const bool base = pwo::contains(p, q);
      for (std::size_t s = 0; s < 8; ++s) CHECK(pwo::contains(sp[s], sq[s]) == base);
    }
}

TEST_CASE("sums", "[perm_core]") {
  CHECK(pwo::direct_sum(Permutation{2, 1}, Permutation{2, 1}) == Permutation{2, 1, 4, 3});
  CHECK(pwo::skew_sum(Permutation{1, 2}, Permutation{1, 2}) == Permutation{3, 4, 1, 2});
  const Permutation p{2, 4, 1, 3};
  CHECK(pwo::direct_sum(p, Permutation{}) == p);
  CHECK(pwo::skew_sum(Permutation{}, p) == p);

  const auto small = oracle::perms_up_to(3);
  for (const auto& a : small)
    for (const auto& b : small) {
      for (const auto& s : {pwo::direct_sum(a, b), pwo::skew_sum(a, b)}) {
        CHECK(s.size() == a.size() + b.size());
        CHECK(pwo::contains(s, a));
        CHECK(pwo::contains(s, b));
      }
    }
}

TEST_CASE("symmetries match the dot-diagram orbit", "[perm_core]") {
  CHECK(pwo::symmetries(Permutation{1, 2}) == std::vector<Permutation>{Permutation{1, 2}, Permutation{2, 1}});
  CHECK(pwo::symmetries(Permutation{1}) == std::vector<Permutation>{Permutation{1}});
  CHECK(pwo::symmetries(Permutation{2, 4, 1, 3}) == oracle::orbit(Permutation{2, 4, 1, 3}));
  for (const auto& p : oracle::perms_up_to(5)) CHECK(pwo::symmetries(p) == oracle::orbit(p));
}

TEST_CASE("wreath", "[perm_core]") {
  CHECK(pwo::wreath(Permutation{1, 2}, {Permutation{2, 1}, Permutation{1}}) == Permutation{2, 1, 3});
  CHECK(pwo::wreath(Permutation{2, 1, 3}, {Permutation{1}, Permutation{1}, Permutation{1}}) == Permutation{2, 1, 3});
  const Permutation q{3, 1, 4, 2};
  CHECK(pwo::wreath(q, {q, q, q, q}) ==
        Permutation{11, 9, 12, 10, 3, 1, 4, 2, 15, 13, 16, 14, 7, 5, 8, 6});
  CHECK_THROWS_AS(pwo::wreath(Permutation{1, 2}, {Permutation{1}}), pwo::arity_error);
  CHECK_THROWS_AS(pwo::wreath(Permutation{1, 2}, {Permutation{1}, Permutation{}}), pwo::domain_error);

  const auto small = oracle::perms_up_to(4);
  for (const auto& a : small)
    for (const auto& b : small) {
      CHECK(pwo::wreath(Permutation{1, 2}, {a, b}) == pwo::direct_sum(a, b));
      CHECK(pwo::wreath(Permutation{2, 1}, {a, b}) == pwo::skew_sum(a, b));
    }
}

TEST_CASE("intervals and simplicity", "[perm_core]") {
  CHECK_FALSE(pwo::intervals(Permutation{2, 5, 3, 4, 1}).empty());
  CHECK(pwo::intervals(Permutation{3, 5, 1, 4, 2}).empty());
  CHECK(pwo::intervals(Permutation{1, 2, 3}) == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(pwo::is_simple(Permutation{3, 5, 1, 4, 2}));
  CHECK_FALSE(pwo::is_simple(Permutation{2, 5, 3, 4, 1}));
  CHECK(pwo::is_simple(Permutation{2, 4, 1, 3}));

  for (int n = 1; n <= 7; ++n)
    for (const auto& p : oracle::perms_of(n)) {
      CHECK(pwo::intervals(p) == oracle::intervals(p));
      CHECK(pwo::is_simple(p) == pwo::intervals(p).empty());
    }
  std::mt19937 rng(8);
  for (int t = 0; t < 500; ++t) {
    const auto p = oracle::random_perm(rng, 8);
    CHECK(pwo::is_simple(p) == oracle::intervals(p).empty());
  }
}

TEST_CASE("avoiders and closure", "[perm_core]") {
  const std::vector<Permutation> x12{Permutation{1, 2}};
  CHECK(pwo::avoiders(x12, 3) == std::vector<Permutation>{Permutation{3, 2, 1}});
  const std::vector<Permutation> x1{Permutation{1}};
  CHECK(pwo::avoiders(x1, 2).empty());
  CHECK(pwo::avoiders(std::vector<Permutation>{}, 3).size() == 6);
  CHECK_THROWS_AS(pwo::avoiders(x12, 10), pwo::resource_error);

  const std::vector<Permutation> x321{Permutation{3, 2, 1}};
  CHECK(pwo::closure_up_to(x321, 2) == std::vector<Permutation>{Permutation{1}, Permutation{2, 1}});
  CHECK(pwo::closure_up_to(std::vector<Permutation>{}, 4).empty());
  const Permutation p{2, 4, 1, 3};
  const auto cl = pwo::closure_up_to(std::vector<Permutation>{p}, 4);
  CHECK(std::binary_search(cl.begin(), cl.end(), p));

  const std::vector<Permutation> basis{Permutation{2, 1, 3}, Permutation{1, 3, 2}};
  for (const auto& q : pwo::avoiders(basis, 5))
    for (const auto& b : basis) CHECK_FALSE(oracle::contains(q, b));
  std::size_t count = 0;
  for (const auto& q : oracle::perms_of(5))
    if (!oracle::contains(q, basis[0]) && !oracle::contains(q, basis[1])) ++count;
  CHECK(pwo::avoiders(basis, 5).size() == count);
}

TEST_CASE("strong and sum completion", "[perm_core]") {
  const std::vector<Permutation> one{Permutation{1}};
  CHECK(pwo::in_strong_completion(Permutation{2, 1, 4, 3}, one));
  CHECK_FALSE(pwo::in_strong_completion(Permutation{3, 1, 4, 2}, one));
  const std::vector<Permutation> chain{Permutation{1}, Permutation{2, 1}, Permutation{3, 2, 1}};
  CHECK(pwo::in_strong_completion(Permutation{2, 1, 5, 4, 3}, chain, pwo::Completion::sum_only));
  CHECK_FALSE(pwo::in_strong_completion(Permutation{1}, std::vector<Permutation>{}));
  CHECK_THROWS_AS(pwo::in_strong_completion(Permutation{1}, std::vector<Permutation>{Permutation{}}),
                  pwo::domain_error);

  const std::vector<std::vector<Permutation>> bases{
      {Permutation{1}}, {Permutation{2, 4, 1, 3}}, {Permutation{1}, Permutation{3, 1, 4, 2}}, chain};
  for (const auto& base : bases) {
    for (bool sums_only : {false, true}) {
      const auto gen = oracle::completion(base, 7, sums_only);
      const auto mode = sums_only ? pwo::Completion::sum_only : pwo::Completion::strong;
      for (const auto& p : oracle::perms_up_to(6)) CHECK(pwo::in_strong_completion(p, base, mode) == (gen.count(p) > 0));
    }
  }
}

TEST_CASE("named families", "[perm_core]") {
  CHECK(pwo::d_parallel(2) == Permutation{2, 4, 1, 3});
  CHECK(pwo::z_sequence(1) == Permutation{3, 1, 4, 2});
  CHECK(pwo::z_sequence(2) == Permutation{11, 9, 12, 10, 3, 1, 4, 2, 15, 13, 16, 14, 7, 5, 8, 6});
  CHECK(pwo::increasing_oscillation(2).values() == oracle::sort_rank(ints({4, 1, 6, 3})));
  for (int k = 2; k <= 8; ++k) CHECK(pwo::is_simple(pwo::increasing_oscillation(k)));
  for (int k = 2; k <= 6; ++k) CHECK(pwo::is_simple(pwo::d_parallel(k)));
  CHECK_THROWS_AS(pwo::d_parallel(0), pwo::domain_error);
  CHECK_THROWS_AS(pwo::z_sequence(0), pwo::domain_error);
  CHECK_THROWS_AS(pwo::increasing_oscillation(0), pwo::domain_error);
}

TEST_CASE("simple permutations contain a simple one of length n-1 or n-2", "[perm_core]") {
  for (int n = 4; n <= 7; ++n) {
    std::vector<Permutation> smaller;
    for (int m : {n - 1, n - 2})
      for (const auto& q : oracle::perms_of(m))
        if (pwo::is_simple(q)) smaller.push_back(q);
    for (const auto& p : oracle::perms_of(n)) {
      if (!pwo::is_simple(p)) continue;
      const bool found = std::any_of(smaller.begin(), smaller.end(), [&](const Permutation& q) { return pwo::contains(p, q); });
      CHECK(found);
    }
  }
}
