#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "isoperim/decompose.hpp"
#include "isoperim/oracle.hpp"

using namespace isoperim;

TEST_CASE("oracle base cases") {
  const OracleResult r = exact_area_bounded(relator(), 2, 15);
  REQUIRE(r.best.has_value());
  CHECK(*r.best == 1);
  CHECK(r.status == OracleStatus::exact);

  const Word u2 = Word::parse("BcBcabbA");
  const OracleResult r2 = exact_area_bounded(u2, 3, 25);
  REQUIRE(r2.best.has_value());
  CHECK(*r2.best == 2);
  CHECK(r2.status == OracleStatus::exact);

  const OracleResult empty = exact_area_bounded(Word(), 0, 0);
  REQUIRE(empty.best.has_value());
  CHECK(*empty.best == 0);
  CHECK(empty.status == OracleStatus::exact);
}

TEST_CASE("oracle respects caps") {
  // Depth cap too small: no path is reported, honestly.
  const Word u2 = Word::parse("BcBcabbA");
  const OracleResult starved = exact_area_bounded(u2, 1, 25);
  CHECK(starved.status == OracleStatus::not_found);
  CHECK_FALSE(starved.best.has_value());

  CHECK_THROWS_AS(exact_area_bounded(u2, -1, 25), std::invalid_argument);
  CHECK_THROWS_AS(exact_area_bounded(u2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(exact_area_bounded(Word::parse("c"), 2, 20), NotInNormalClosure);
}

TEST_CASE("oracle sandwich against the decomposer") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 60; ++seed) {
    const Word w = random_element_of_N(seed, 2, 3);
    if (w.length() > 14) continue;
    ++checked;
    const auto caps = default_caps(w);
    const OracleResult r = exact_area_bounded(w, caps.d_max, caps.len_cap);
    REQUIRE(r.best.has_value());
    const int lower = std::abs(phi(w));
    const int upper = static_cast<int>(decompose(w).size());
    CHECK(lower <= *r.best);
    CHECK(*r.best <= upper);
    if (!free_reduce(w).empty()) CHECK(2 * upper <= ab_length(w));
    if (*r.best == lower) CHECK(r.status == OracleStatus::exact);
  }
}

TEST_CASE("insertion moves stay in the normal closure") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Word w = random_element_of_N(rng(), 3, 4);
    const auto& entries = RelatorTable::instance().entries();
    const auto& entry = entries[rng() % entries.size()];
    const std::size_t pos = w.length() == 0 ? 0 : rng() % (w.length() + 1);
    std::vector<Letter> letters(w.letters().begin(),
                                w.letters().begin() + static_cast<std::ptrdiff_t>(pos));
    letters.insert(letters.end(), entry.s.letters().begin(), entry.s.letters().end());
    letters.insert(letters.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(pos),
                   w.letters().end());
    CHECK(is_in_N(free_reduce(Word(std::move(letters)))));
  }
}

TEST_CASE("oracle is deterministic") {
  const Word w = random_element_of_N(77, 2, 3);
  const auto caps = default_caps(w);
  const OracleResult a = exact_area_bounded(w, caps.d_max, caps.len_cap);
  const OracleResult b = exact_area_bounded(w, caps.d_max, caps.len_cap);
  CHECK(a.best == b.best);
  CHECK(a.status == b.status);
  CHECK(a.explored == b.explored);
}

TEST_CASE("random elements of N") {
  // With no conjugator budget the single factor is the relator itself.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Word w = random_element_of_N(seed, 1, 0);
    CHECK((w == relator() || w == relator().inverse()));
  }
  for (std::uint64_t seed = 50; seed < 80; ++seed) {
    const Word w = random_element_of_N(seed, 2, 3);
    CHECK(is_in_N(w));
    CHECK(std::abs(phi(w)) <= 2);
    CHECK(random_element_of_N(seed, 2, 3) == w);
  }
  CHECK_THROWS_AS(random_element_of_N(1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(random_element_of_N(1, 2, -1), std::invalid_argument);
}
