#include "isoperim/word.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace isoperim {

namespace {
constexpr char kAlphabet[] = "aAbBcC";
}

Letter Letter::from_char(char ch) {
  for (std::uint8_t i = 0; i < 6; ++i) {
    if (kAlphabet[i] == ch) return Letter(i);
  }
  throw WordParseError(std::string("invalid letter '") + ch + "' (expected one of a A b B c C)");
}

char Letter::to_char() const { return kAlphabet[code_]; }

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  bool saw_one = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '1') {
      saw_one = true;
      continue;
    }
    letters.push_back(Letter::from_char(ch));
  }
  if (saw_one && !letters.empty()) {
    throw WordParseError("'1' denotes the empty word and cannot be mixed with letters");
  }
  return Word(std::move(letters));
}

bool Word::is_reduced() const {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    if (letters_[i] == letters_[i + 1].inverse()) return false;
  }
  return true;
}

bool Word::is_cyclically_reduced() const {
  if (!is_reduced()) return false;
  if (letters_.size() < 2) return true;
  return letters_.front() != letters_.back().inverse();
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l.to_char());
  return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.length() + v.length());
  out.insert(out.end(), u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(out));
}

Word operator*(const Word& u, const Word& v) { return free_reduce(concat(u, v)); }

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (Letter l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

CyclicWord cyclic_reduce(const Word& w) {
  Word reduced = free_reduce(w);
  std::vector<Letter> conj;
  std::size_t lo = 0, hi = reduced.length();
  const auto& ls = reduced.letters();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    conj.push_back(ls[lo]);
    ++lo;
    --hi;
  }
  return CyclicWord{Word(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                             ls.begin() + static_cast<std::ptrdiff_t>(hi))),
                    Word(std::move(conj))};
}

Word rotate(const Word& w, std::size_t offset) {
  if (w.empty()) return w;
  offset %= w.length();
  std::vector<Letter> out;
  out.reserve(w.length());
  out.insert(out.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(offset), w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(offset));
  return Word(std::move(out));
}

Word canonical_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.length(); ++k) {
    Word cand = rotate(w, k);
    if (cand < best) best = cand;
  }
  return best;
}

bool conjugate_in_free_group(const Word& u, const Word& v) {
  const Word cu = cyclic_reduce(u).core;
  const Word cv = cyclic_reduce(v).core;
  if (cu.length() != cv.length()) return false;
  return canonical_rotation(cu) == canonical_rotation(cv);
}

int ab_length(const Word& w) {
  const Word core = cyclic_reduce(w).core;
  int count = 0;
  for (Letter l : core.letters()) {
    if (l.symbol() != Letter::Sym::c) ++count;
  }
  return count;
}

int phi(const Word& w) {
  int sum = 0;
  for (Letter l : w.letters()) {
    if (l.symbol() == Letter::Sym::c) sum += l.is_inverse() ? -1 : 1;
  }
  return sum;
}

std::pair<int, int> abelianize_ab(const Word& w) {
  int x = 0, y = 0;
  for (Letter l : w.letters()) {
    const int sign = l.is_inverse() ? -1 : 1;
    switch (l.symbol()) {
      case Letter::Sym::a: y += sign; break;
      case Letter::Sym::b: x += sign; break;
      case Letter::Sym::c: break;
    }
  }
  return {x, y};
}

}  // namespace isoperim
