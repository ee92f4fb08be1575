#include "isoperim/oracle.hpp"

#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>

namespace isoperim {

OracleCaps default_caps(const Word& w) {
  return OracleCaps{4, static_cast<int>(2 * w.length()) + 10};
}

namespace {

struct SearchContext {
  int len_cap;
  std::uint64_t explored = 0;
  // Transposition table for the current deepening iteration: word ->
  // largest remaining depth it was expanded with.
  std::map<Word, int> seen;

  bool dfs(const Word& state, int remaining) {
    ++explored;
    if (state.empty()) return true;
    if (remaining == 0) return false;
    auto it = seen.find(state);
    if (it != seen.end() && it->second >= remaining) return false;
    seen[state] = remaining;

    const auto& table = RelatorTable::instance().entries();
    const std::size_t n = state.length();
    for (std::size_t pos = 0; pos <= n; ++pos) {
      std::vector<Letter> prefix(state.letters().begin(),
                                 state.letters().begin() + static_cast<std::ptrdiff_t>(pos));
      for (const auto& entry : table) {
        std::vector<Letter> candidate = prefix;
        candidate.insert(candidate.end(), entry.s.letters().begin(), entry.s.letters().end());
        candidate.insert(candidate.end(),
                         state.letters().begin() + static_cast<std::ptrdiff_t>(pos),
                         state.letters().end());
        const Word next = free_reduce(Word(std::move(candidate)));
        if (static_cast<int>(next.length()) > len_cap) continue;
        if (dfs(next, remaining - 1)) return true;
      }
    }
    return false;
  }
};

}  // namespace

OracleResult exact_area_bounded(const Word& w, int d_max, int len_cap) {
  if (d_max < 0) throw std::invalid_argument("oracle: d_max must be >= 0");
  if (len_cap < static_cast<int>(w.length())) {
    throw std::invalid_argument("oracle: len_cap must be >= |w|");
  }
  if (!is_in_N(w)) {
    throw NotInNormalClosure("oracle: word " + w.str() + " is not in the normal closure");
  }

  OracleResult result;
  result.word = free_reduce(w);
  result.caps = OracleCaps{d_max, len_cap};
  result.explored = 0;
  const int lower = std::abs(phi(w));

  for (int depth = result.word.empty() ? 0 : std::max(lower, 1); depth <= d_max; ++depth) {
    SearchContext ctx;
    ctx.len_cap = len_cap;
    const bool found = ctx.dfs(result.word, depth);
    result.explored += ctx.explored;
    if (found) {
      result.best = depth;
      result.status = depth == lower ? OracleStatus::exact : OracleStatus::upper_bound_only;
      return result;
    }
  }
  result.best = std::nullopt;
  result.status = OracleStatus::not_found;
  return result;
}

Word random_element_of_N(std::uint64_t seed, int k_max, int g_max) {
  if (k_max < 1) throw std::invalid_argument("random_element_of_N: k_max must be >= 1");
  if (g_max < 0) throw std::invalid_argument("random_element_of_N: g_max must be >= 0");

  std::mt19937_64 rng(seed);
  const auto draw = [&rng](std::uint64_t bound) { return rng() % bound; };

  const int k = 1 + static_cast<int>(draw(static_cast<std::uint64_t>(k_max)));
  Word product;
  for (int i = 0; i < k; ++i) {
    const std::size_t glen = static_cast<std::size_t>(draw(static_cast<std::uint64_t>(g_max) + 1));
    std::vector<Letter> g;
    g.reserve(glen);
    for (std::size_t j = 0; j < glen; ++j) {
      g.push_back(Letter::from_code(static_cast<std::uint8_t>(draw(6))));
    }
    const Word conj(std::move(g));
    const Word base = draw(2) == 0 ? relator() : relator().inverse();
    product = product * conj * base * conj.inverse();
  }
  return product;
}

}  // namespace isoperim
