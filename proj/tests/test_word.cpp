#include <doctest.h>

#include "helpers.hpp"
#include "isoperim/word.hpp"

using namespace isoperim;

TEST_CASE("parse and print") {
  CHECK(Word::parse("abABc").str() == "abABc");
  CHECK(Word::parse("  a b\tA ").str() == "abA");
  CHECK(Word::parse("").str() == "1");
  CHECK(Word::parse("1").str() == "1");
  CHECK_THROWS_AS(Word::parse("abx"), WordParseError);
  CHECK_THROWS_AS(Word::parse("a1"), WordParseError);
}

TEST_CASE("letter involution") {
  for (std::uint8_t code = 0; code < 6; ++code) {
    const Letter l = Letter::from_code(code);
    CHECK(l.inverse().inverse() == l);
    CHECK(l.inverse() != l);
    CHECK(Letter::from_char(l.to_char()) == l);
  }
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(Word::parse("aA")).str() == "1");
  CHECK(free_reduce(Word::parse("abBAc")).str() == "c");
  CHECK(free_reduce(Word::parse("abABc")).str() == "abABc");
}

TEST_CASE("free reduction properties") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Word w = testing::random_raw_word(rng, rng() % 40);
    const Word red = free_reduce(w);
    CHECK(red.is_reduced());
    CHECK(free_reduce(red) == red);
    CHECK(red.length() <= w.length());
    // w and red are equal in the group: w^{-1} red reduces to nothing.
    CHECK((w.inverse() * red).empty());
  }
}

TEST_CASE("cyclic reduction") {
  const CyclicWord cw = cyclic_reduce(Word::parse("Bab"));
  CHECK(cw.core.str() == "a");
  CHECK(cw.conjugator.str() == "B");

  const CyclicWord fixed = cyclic_reduce(Word::parse("abABc"));
  CHECK(fixed.core.str() == "abABc");
  CHECK(fixed.conjugator.str() == "1");

  const CyclicWord empty = cyclic_reduce(Word());
  CHECK(empty.core.empty());
  CHECK(empty.conjugator.empty());
}

TEST_CASE("cyclic reduction reassembles") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const Word w = testing::random_raw_word(rng, rng() % 30);
    const CyclicWord cw = cyclic_reduce(w);
    CHECK(cw.core.is_cyclically_reduced());
    CHECK(cw.conjugator * cw.core * cw.conjugator.inverse() == free_reduce(w));
    CHECK(ab_length(w) <= static_cast<int>(cw.core.length()));
  }
}

TEST_CASE("ab length") {
  CHECK(ab_length(Word::parse("abABc")) == 4);
  CHECK(ab_length(Word::parse("ccc")) == 0);
  // u_k = (b^{-1}c)^k a b^k a^{-1} carries k+1 letters from {b, B} and
  // two from {a, A}: 2k+2 in total.
  for (int k = 1; k <= 5; ++k) {
    std::string s;
    for (int i = 0; i < k; ++i) s += "Bc";
    s += "a";
    for (int i = 0; i < k; ++i) s += "b";
    s += "A";
    CHECK(ab_length(Word::parse(s)) == 2 * k + 2);
  }
}

TEST_CASE("phi") {
  CHECK(phi(Word::parse("abABc")) == 1);
  CHECK(phi(Word::parse("BcBcabbA")) == 2);
  CHECK(phi(Word()) == 0);
}

TEST_CASE("ab abelianization") {
  CHECK(abelianize_ab(Word::parse("a")) == std::pair<int, int>{0, 1});
  CHECK(abelianize_ab(Word::parse("abABc")) == std::pair<int, int>{0, 0});
  CHECK(abelianize_ab(Word::parse("abb")) == std::pair<int, int>{2, 1});
}

TEST_CASE("functionals are conjugation invariant") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const Word w = testing::random_raw_word(rng, 1 + rng() % 20);
    const Word g = testing::random_raw_word(rng, rng() % 10);
    const Word conj = g * w * g.inverse();
    CHECK(phi(conj) == phi(w));
    CHECK(abelianize_ab(free_reduce(conj)) == abelianize_ab(free_reduce(w)));
    CHECK(ab_length(conj) == ab_length(w));
  }
}

TEST_CASE("rotation utilities") {
  const Word w = Word::parse("abABc");
  CHECK(rotate(w, 1).str() == "bABca");
  CHECK(rotate(w, 3).str() == "BcabA");
  CHECK(canonical_rotation(Word::parse("BcabA")).str() == "abABc");
  CHECK(conjugate_in_free_group(Word::parse("BcabA"), Word::parse("abABc")));
  CHECK(conjugate_in_free_group(Word::parse("aBcabAA"), Word::parse("abABc")));
  CHECK_FALSE(conjugate_in_free_group(Word::parse("abABc"), Word::parse("CbaBA")));
}
