#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isoperim {

// Thrown when a word string contains anything outside the a/A/b/B/c/C
// grammar (whitespace is ignored, "1" denotes the empty word).
struct WordParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One generator or inverse generator of the rank-3 free group.
// Encoding: 0=a 1=A 2=b 3=B 4=c 5=C, so code^1 is the inverse and the
// natural code order realises the letter order a < A < b < B < c < C.
class Letter {
 public:
  enum class Sym : std::uint8_t { a = 0, b = 1, c = 2 };

  constexpr Letter(Sym s, bool inverse)
      : code_(static_cast<std::uint8_t>(2 * static_cast<int>(s) + (inverse ? 1 : 0))) {}

  static Letter from_char(char ch);
  static constexpr Letter from_code(std::uint8_t code) { return Letter(code); }

  constexpr Sym symbol() const { return static_cast<Sym>(code_ / 2); }
  constexpr bool is_inverse() const { return code_ & 1; }
  constexpr Letter inverse() const { return Letter(static_cast<std::uint8_t>(code_ ^ 1)); }
  constexpr std::uint8_t code() const { return code_; }
  char to_char() const;

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::uint8_t code) : code_(code) {}
  std::uint8_t code_;
};

inline constexpr Letter kLetterA{Letter::Sym::a, false};
inline constexpr Letter kLetterB{Letter::Sym::b, false};
inline constexpr Letter kLetterC{Letter::Sym::c, false};

// An immutable word over the six letters. Plain value type; every
// operation below returns a fresh word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(Letter single) : letters_{single} {}

  // Accepts [aAbBcC ]* plus the single token "1" for the identity.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }

  bool is_reduced() const;
  bool is_cyclically_reduced() const;

  Word inverse() const;

  // The empty word prints as "1".
  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Raw concatenation, no reduction.
Word concat(const Word& u, const Word& v);

// Group multiplication: concatenate and freely reduce.
Word operator*(const Word& u, const Word& v);

// Free reduction: cancel all adjacent x x^{-1} pairs. Idempotent.
Word free_reduce(const Word& w);

// A cyclically reduced core together with the conjugator g that
// recovers the original word as g . core . g^{-1}.
struct CyclicWord {
  Word core;
  Word conjugator;
};

CyclicWord cyclic_reduce(const Word& w);

// Rotation of w by `offset` letters: w[offset:] + w[:offset].
Word rotate(const Word& w, std::size_t offset);

// Lexicographically least rotation under a < A < b < B < c < C.
Word canonical_rotation(const Word& w);

// True iff u and v have conjugate cyclic cores (same cyclic word up to
// rotation).
bool conjugate_in_free_group(const Word& u, const Word& v);

// Count of a^{+-1}, b^{+-1} letters in the cyclic reduction of w.
int ab_length(const Word& w);

// Signed exponent sum of c. Conjugation invariant.
int phi(const Word& w);

// Image in Z^2 under a -> (0,1), b -> (1,0), c -> (0,0).
std::pair<int, int> abelianize_ab(const Word& w);

}  // namespace isoperim
