#include "isoperim/relator.hpp"

#include <set>

namespace isoperim {

const Word& relator() {
  static const Word r = Word::parse("abABc");
  return r;
}

RelatorTable::RelatorTable() {
  int idx = 0;
  for (int exponent : {1, -1}) {
    const Word base = exponent == 1 ? relator() : relator().inverse();
    for (std::size_t j = 0; j < base.length(); ++j) {
      const Word s = rotate(base, j);
      std::vector<Letter> prefix(s.letters().begin(), s.letters().begin() + 4);
      const Letter completion = s.at(4).inverse();
      std::vector<Letter> rot(base.letters().begin(), base.letters().begin() + static_cast<std::ptrdiff_t>(j));
      entries_[static_cast<std::size_t>(idx)] =
          RelatorEntry{s, Word(std::move(prefix)), completion, exponent, Word(std::move(rot)), idx};
      ++idx;
    }
  }

  // Each piece determines its s uniquely; the rewrite step depends on it.
  std::set<Word> pieces;
  for (const auto& e : entries_) {
    if (!pieces.insert(e.piece).second) {
      throw std::logic_error("relator table: duplicate length-4 piece " + e.piece.str());
    }
    if (free_reduce(concat(e.piece, Word(e.completion.inverse()))) != e.s) {
      throw std::logic_error("relator table: s != piece . completion^{-1} for " + e.s.str());
    }
    const Word base = e.exponent == 1 ? relator() : relator().inverse();
    if (e.rotation.inverse() * base * e.rotation != e.s) {
      throw std::logic_error("relator table: bad rotation conjugator for " + e.s.str());
    }
  }
}

const RelatorTable& RelatorTable::instance() {
  static const RelatorTable table;
  return table;
}

std::optional<PieceMatch> find_piece(const CyclicWord& cw) {
  const Word& core = cw.core;
  const std::size_t n = core.length();
  if (n < 4) return std::nullopt;
  const auto& table = RelatorTable::instance().entries();
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (const auto& entry : table) {
      bool match = true;
      for (std::size_t k = 0; k < 4; ++k) {
        if (core.at((pos + k) % n) != entry.piece.at(k)) {
          match = false;
          break;
        }
      }
      if (match) return PieceMatch{pos, entry.index};
    }
  }
  return std::nullopt;
}

Word project_to_F2(const Word& w) {
  static const Word c_image = Word::parse("baBA");
  static const Word c_inv_image = Word::parse("abAB");
  std::vector<Letter> out;
  out.reserve(4 * w.length());
  for (Letter l : w.letters()) {
    if (l.symbol() == Letter::Sym::c) {
      const Word& img = l.is_inverse() ? c_inv_image : c_image;
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      out.push_back(l);
    }
  }
  return free_reduce(Word(std::move(out)));
}

bool is_in_N(const Word& w) { return project_to_F2(w).empty(); }

}  // namespace isoperim
