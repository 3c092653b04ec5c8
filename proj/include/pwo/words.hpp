#ifndef PWO_WORDS_HPP
#define PWO_WORDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "pwo/error.hpp"

namespace pwo {

/// Thue-Morse prefix over {a,b} of length 2^(generation-1); generation 0 is
/// the empty word.
inline std::string thue_morse(int generation) {
  if (generation < 0) throw domain_error("generation must be >= 0");
  if (generation > 30) throw resource_error("generation " + std::to_string(generation) + " is too large");
  if (generation == 0) return {};
  std::string u = "a", v = "b";
  for (int g = 1; g < generation; ++g) {
    std::string nu = u + v;
    std::string nv = v + u;
    u = std::move(nu);
    v = std::move(nv);
  }
  return u;
}

/// One greedy left-to-right pass: abb -> 2, ab -> 1, a -> 0.
inline std::string tm_substitute(std::string_view w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != 'a') {
      if (w[i] == 'b') throw parse_error("stray 'b' at position " + std::to_string(i));
      throw parse_error(std::string("letter '") + w[i] + "' is not in {a,b}");
    }
    if (w.substr(i, 3) == "abb") {
      out += '2';
      i += 3;
    } else if (w.substr(i, 2) == "ab") {
      out += '1';
      i += 2;
    } else {
      out += '0';
      i += 1;
    }
  }
  return out;
}

/// First square xx as (start, |x|), scanning starts left to right.
inline std::optional<std::pair<std::size_t, std::size_t>> find_square(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; i + 2 * len <= w.size(); ++len)
      if (w.substr(i, len) == w.substr(i + len, len)) return std::make_pair(i, len);
  return std::nullopt;
}

inline bool is_square_free(std::string_view w) { return !find_square(w); }

}  // namespace pwo

#endif  // PWO_WORDS_HPP
