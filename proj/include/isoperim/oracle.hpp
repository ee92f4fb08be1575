#pragma once

#include <cstdint>
#include <optional>

#include "isoperim/relator.hpp"
#include "isoperim/word.hpp"

namespace isoperim {

enum class OracleStatus { exact, upper_bound_only, not_found };

struct OracleCaps {
  int d_max;
  int len_cap;
};

struct OracleResult {
  Word word;
  std::optional<int> best;
  OracleStatus status;
  std::uint64_t explored;
  OracleCaps caps;
};

OracleCaps default_caps(const Word& w);

// Iterative-deepening search for the fewest relator insertions that kill
// the word: states are freely reduced words, moves insert one of the ten
// simple conjugates at any position (then reduce), intermediate lengths
// capped at len_cap. best is exact when it meets the |phi| lower bound;
// otherwise it is reported as an upper bound only.
OracleResult exact_area_bounded(const Word& w, int d_max, int len_cap);

// Seeded product of k <= k_max conjugates g r^{+-1} g^{-1} with
// |g| <= g_max, freely reduced. Deterministic per seed.
Word random_element_of_N(std::uint64_t seed, int k_max, int g_max);

}  // namespace isoperim
