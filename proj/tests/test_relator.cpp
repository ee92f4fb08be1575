#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "isoperim/oracle.hpp"
#include "isoperim/relator.hpp"

using namespace isoperim;

TEST_CASE("relator table rows") {
  const auto& table = RelatorTable::instance();
  CHECK(table.entries().size() == 10);

  const std::set<std::string> words = {"abABc", "bABca", "ABcab", "BcabA", "cabAB",
                                       "CbaBA", "ACbaB", "BACba", "aBACb", "baBAC"};
  std::set<std::string> seen;
  for (const auto& e : table.entries()) seen.insert(e.s.str());
  CHECK(seen == words);

  const RelatorEntry& r1 = table.entry(0);
  CHECK(r1.s.str() == "abABc");
  CHECK(r1.piece.str() == "abAB");
  CHECK(r1.completion == Letter(Letter::Sym::c, true));
  CHECK(r1.exponent == 1);
  CHECK(r1.rotation.empty());

  const RelatorEntry& r4 = table.entry(3);
  CHECK(r4.s.str() == "BcabA");
  CHECK(r4.piece.str() == "Bcab");
  CHECK(r4.completion == Letter(Letter::Sym::a, false));
}

TEST_CASE("relator table structural identities") {
  std::set<Word> pieces;
  for (const auto& e : RelatorTable::instance().entries()) {
    CHECK(e.s.length() == 5);
    CHECK(e.piece.length() == 4);
    CHECK(pieces.insert(e.piece).second);
    CHECK(free_reduce(concat(e.s, Word(e.completion))) == e.piece);
    const Word base = e.exponent == 1 ? relator() : relator().inverse();
    CHECK(e.rotation.inverse() * base * e.rotation == e.s);
  }
}

TEST_CASE("find_piece") {
  const auto at = [](const std::string& s) {
    return find_piece(CyclicWord{Word::parse(s), Word()});
  };

  auto hit = at("abABc");
  REQUIRE(hit.has_value());
  CHECK(hit->position == 0);
  CHECK(hit->entry_index == 0);

  hit = at("BcBcabbA");  // u_2
  REQUIRE(hit.has_value());
  CHECK(hit->position == 2);
  CHECK(hit->entry_index == 3);

  CHECK_FALSE(at("aa").has_value());
  CHECK_FALSE(at("abab").has_value());
  // The window may wrap, so a length-4 word is scanned as-is.
  CHECK(at("abAB").has_value());

  // Piece occurring only across the wrap-around seam.
  hit = at("abccBc");
  REQUIRE(hit.has_value());
  CHECK(hit->position == 4);
  CHECK(hit->entry_index == 3);
}

TEST_CASE("projection to the free quotient") {
  CHECK(project_to_F2(Word::parse("c")).str() == "baBA");
  CHECK(project_to_F2(Word::parse("abABc")).empty());
  CHECK(project_to_F2(Word::parse("ab")).str() == "ab");

  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const Word u = testing::random_raw_word(rng, rng() % 12);
    const Word v = testing::random_raw_word(rng, rng() % 12);
    CHECK(project_to_F2(u * v) == project_to_F2(u) * project_to_F2(v));
  }
}

TEST_CASE("normal closure membership") {
  CHECK(is_in_N(relator()));
  CHECK(is_in_N(Word()));
  CHECK_FALSE(is_in_N(Word::parse("c")));
  CHECK_FALSE(is_in_N(Word::parse("ab")));

  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const Word g = testing::random_raw_word(rng, rng() % 8);
    const Word base = rng() % 2 ? relator() : relator().inverse();
    CHECK(is_in_N(g * base * g.inverse()));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(is_in_N(random_element_of_N(seed, 8, 8)));
  }
}

TEST_CASE("piece existence on random normal-closure elements") {
  int searched = 0;
  for (std::uint64_t seed = 1000; seed < 1250; ++seed) {
    const Word w = random_element_of_N(seed, 6, 6);
    const Word core = cyclic_reduce(w).core;
    if (core.empty()) continue;
    ++searched;
    CHECK(find_piece(CyclicWord{core, Word()}).has_value());
  }
  CHECK(searched > 200);
}
