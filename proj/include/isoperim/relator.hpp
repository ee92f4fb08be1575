#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "isoperim/word.hpp"

namespace isoperim {

struct NotInNormalClosure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A nonempty cyclically reduced element of N without a length-4 piece
// would contradict the piece-existence theorem; treated as a bug.
struct PieceNotFound : std::logic_error {
  using std::logic_error::logic_error;
};

// The defining relator r = a b a^{-1} b^{-1} c.
const Word& relator();

// One of the ten simple conjugates s of r^{+-1}, with its length-4
// prefix piece, the completion letter u_* (s = piece . u_*^{-1}), and
// the rotation conjugator p with s = p^{-1} . r^{exponent} . p.
struct RelatorEntry {
  Word s;
  Word piece;
  Letter completion = Letter(Letter::Sym::a, false);
  int exponent = 1;
  Word rotation;
  int index = 0;  // position in the table, r1..r5 then their inverses
};

class RelatorTable {
 public:
  static const RelatorTable& instance();

  const std::array<RelatorEntry, 10>& entries() const { return entries_; }
  const RelatorEntry& entry(std::size_t i) const { return entries_.at(i); }

 private:
  RelatorTable();
  std::array<RelatorEntry, 10> entries_;
};

struct PieceMatch {
  std::size_t position;  // start index in the cyclic core (wrap-around allowed)
  int entry_index;       // index into RelatorTable
};

// Scans the cyclic core for a length-4 subword equal to some entry's
// piece, wrap-around included. Returns the match with the smallest
// (position, entry index), or nullopt when the core has none.
std::optional<PieceMatch> find_piece(const CyclicWord& cw);

// Rewrites every c^{+-1} as (b a b^{-1} a^{-1})^{+-1} and freely
// reduces, landing in the free group on a, b.
Word project_to_F2(const Word& w);

// Membership in the normal closure N of the relator: w is in N exactly
// when its projection to the rank-2 free group is trivial.
bool is_in_N(const Word& w);

}  // namespace isoperim
