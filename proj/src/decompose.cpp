#include "isoperim/decompose.hpp"

#include <cstdlib>

namespace isoperim {

namespace {

int core_ab_count(const Word& core) {
  int count = 0;
  for (Letter l : core.letters()) {
    if (l.symbol() != Letter::Sym::c) ++count;
  }
  return count;
}

}  // namespace

Decomposition decompose(const Word& w, std::vector<TraceStep>* trace) {
  if (!is_in_N(w)) {
    throw NotInNormalClosure("word " + w.str() + " is not in the normal closure of " + relator().str());
  }

  const auto& table = RelatorTable::instance();
  Decomposition result;
  Word outer;                     // invariant: input = factors . outer current outer^{-1}
  Word current = free_reduce(w);
  bool have_prev = false;
  std::size_t prev_len = 0;
  int prev_ab = 0;

  for (;;) {
    CyclicWord cyc = cyclic_reduce(current);
    outer = outer * cyc.conjugator;
    Word core = std::move(cyc.core);
    if (core.empty()) break;

    if (have_prev) {
      // Progress guarantees of the rewrite step, on consecutive cores.
      if (core.length() + 3 > prev_len || core_ab_count(core) + 2 > prev_ab) {
        throw std::logic_error("decompose: rewrite step failed to shrink the word");
      }
    }
    prev_len = core.length();
    prev_ab = core_ab_count(core);
    have_prev = true;

    const auto match = find_piece(CyclicWord{core, Word()});
    if (!match) {
      throw PieceNotFound("no length-4 piece in cyclically reduced word " + core.str());
    }
    const RelatorEntry& entry = table.entry(static_cast<std::size_t>(match->entry_index));

    std::size_t pos = match->position;
    if (pos + 4 > core.length()) {
      // Wrap-around piece: rotate it to the front, absorbing the
      // rotation into the outer conjugator.
      std::vector<Letter> shift(core.letters().begin(),
                                core.letters().begin() + static_cast<std::ptrdiff_t>(pos));
      outer = outer * Word(std::move(shift));
      core = rotate(core, pos);
      pos = 0;
    }

    // core = p . u . q  ->  (p s p^{-1}) . (p u_* q)
    std::vector<Letter> p_letters(core.letters().begin(),
                                  core.letters().begin() + static_cast<std::ptrdiff_t>(pos));
    std::vector<Letter> rest(core.letters().begin() + static_cast<std::ptrdiff_t>(pos) + 4,
                             core.letters().end());
    const Word p(std::move(p_letters));

    result.factors.push_back(
        Factor{outer * p * entry.rotation.inverse(), entry.exponent});

    std::vector<Letter> next;
    next.reserve(core.length());
    next.insert(next.end(), p.letters().begin(), p.letters().end());
    next.push_back(entry.completion);
    next.insert(next.end(), rest.begin(), rest.end());
    current = free_reduce(Word(std::move(next)));

    if (trace) {
      trace->push_back(TraceStep{entry.piece, match->position, entry.index, current});
    }
  }

  return result;
}

Word decomposition_product(const Decomposition& d) {
  Word product;
  const Word& r = relator();
  for (const Factor& f : d.factors) {
    const Word base = f.exponent == 1 ? r : r.inverse();
    product = product * f.conjugator * base * f.conjugator.inverse();
  }
  return product;
}

bool verify_decomposition(const Word& w, const Decomposition& d) {
  return decomposition_product(d) == free_reduce(w);
}

AreaCertificate certify(const Word& w) {
  AreaCertificate cert;
  cert.word = free_reduce(w);
  cert.decomposition = decompose(w, &cert.steps);
  cert.upper = static_cast<int>(cert.decomposition.size());
  cert.lower = std::abs(phi(w));
  cert.ab_len = ab_length(w);
  cert.exact = cert.lower == cert.upper;

  if (!verify_decomposition(w, cert.decomposition)) {
    throw std::logic_error("certify: decomposition failed multiply-back verification");
  }
  if (cert.lower > cert.upper) {
    throw std::logic_error("certify: phi lower bound exceeds decomposition size");
  }
  if (!cert.word.empty() && 2 * cert.upper > cert.ab_len) {
    throw std::logic_error("certify: isoperimetric bound 2d <= l(w) violated");
  }
  return cert;
}

}  // namespace isoperim
