#ifndef PWO_WORD_WALK_HPP
#define PWO_WORD_WALK_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pwo/error.hpp"
#include "pwo/generator.hpp"
#include "pwo/graph.hpp"
#include "pwo/matrix.hpp"

namespace pwo {

enum class WordMode { flower, shared_edge };

namespace detail {

inline int letter_value(char ch, int limit, std::size_t index) {
  if (ch < '0' || ch >= static_cast<char>('0' + limit)) {
    throw invalid_word_error(std::string("letter '") + ch + "' at position " + std::to_string(index) +
                             " is not in 0.." + std::to_string(limit - 1));
  }
  return ch - '0';
}

inline std::vector<Cell> flower_walk(const SignMatrix& m, std::string_view word, std::size_t n) {
  const auto flower = find_flower(m);
  if (!flower) throw shape_error("G(M) is not a flower (" + describe(classify_graph(m)) + ")");
  const int petals = static_cast<int>(flower->petals.size());
  std::vector<Cell> walk{flower->petals[static_cast<std::size_t>(letter_value(word[0], petals, 0))].near};
  for (std::size_t i = 0; i < word.size() && walk.size() < n; ++i) {
    const Petal& p = flower->petals[static_cast<std::size_t>(letter_value(word[i], petals, i))];
    walk.push_back(p.far);
    walk.insert(walk.end(), p.path.begin(), p.path.end());
    walk.push_back(p.near);
  }
  return walk;
}

inline std::vector<Cell> shared_edge_walk(const SignMatrix& m, std::string_view word, std::size_t n) {
  const auto se = find_shared_edge(m);
  if (!se) throw shape_error("G(M) is not two cycles sharing one cell (" + describe(classify_graph(m)) + ")");
  // cw: shared cell, then the path back to the row vertex; ccw: the reverse
  auto traversal = [&](int cycle, bool cw) {
    const auto& path = se->paths[static_cast<std::size_t>(cycle)];
    std::vector<Cell> t;
    if (cw) {
      t.push_back(se->shared);
      t.insert(t.end(), path.rbegin(), path.rend());
    } else {
      t = path;
      t.push_back(se->shared);
    }
    return t;
  };
  int cycle = 0;
  bool cw = true;
  std::vector<Cell> walk = traversal(cycle, cw);
  for (std::size_t i = 0; i < word.size() && walk.size() < n; ++i) {
    const int letter = letter_value(word[i], 3, i);
    if (letter >= 1) cycle = 1 - cycle;
    if (letter == 2) cw = !cw;
    auto t = traversal(cycle, cw);
    auto first = t.begin();
    if (*first == walk.back()) ++first;
    walk.insert(walk.end(), first, t.end());
  }
  return walk;
}

}  // namespace detail

/// A cell walk on a multi-cycle G(M) driven by a word over {0,1,2}.
///
/// Flower: each letter picks a petal (ordered by column) and goes round it
/// from the hub, far hub cell first. Shared edge: starts clockwise round the
/// right cycle; 0 repeats, 1 switches cycle, 2 switches cycle and direction.
/// The result is validated; a word too short for n cells is a domain error.
inline std::vector<Cell> compile_word_walk(const SignMatrix& m, std::string_view word, WordMode mode,
                                           std::size_t n) {
  if (word.empty()) throw invalid_word_error("direction word is empty");
  std::vector<Cell> walk =
      mode == WordMode::flower ? detail::flower_walk(m, word, n) : detail::shared_edge_walk(m, word, n);
  if (walk.size() < n) {
    throw domain_error("word of length " + std::to_string(word.size()) + " gives only " +
                       std::to_string(walk.size()) + " cells; " + std::to_string(n) + " requested");
  }
  walk.resize(n);
  validate_walk(walk);
  return walk;
}

inline GeneratorState generate_from_word(const SignMatrix& m, std::string_view word, WordMode mode, std::size_t n,
                                         std::optional<Yearn> first_yearn = std::nullopt) {
  return generate_from_walk(m, compile_word_walk(m, word, mode, n), first_yearn);
}

}  // namespace pwo

#endif  // PWO_WORD_WALK_HPP
