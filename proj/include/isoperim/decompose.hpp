#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "isoperim/relator.hpp"
#include "isoperim/word.hpp"

namespace isoperim {

struct Factor {
  Word conjugator;
  int exponent;  // +-1
};

// Witness of w = prod_i  g_i r^{e_i} g_i^{-1}, factors in product order.
struct Decomposition {
  std::vector<Factor> factors;
  std::size_t size() const { return factors.size(); }
};

struct TraceStep {
  Word piece;
  std::size_t position;   // where the piece was found in the cyclic core
  int entry_index;        // relator-table row used
  Word intermediate;      // freely reduced word after the rewrite
};

struct AreaCertificate {
  Word word;
  Decomposition decomposition;
  int upper;    // d = decomposition size
  int lower;    // |phi(word)|
  int ab_len;   // l(word)
  bool exact;   // lower == upper
  std::vector<TraceStep> steps;
};

// Greedy piece rewriting: cyclically reduce, replace the found piece u
// by its completion u_*, record the conjugate factor, repeat until the
// word is gone. Each step drops the (a,b)-length by >= 2 and the word
// length by >= 3 (asserted).
Decomposition decompose(const Word& w, std::vector<TraceStep>* trace = nullptr);

// Multiplies the factors back and compares with free_reduce(w).
bool verify_decomposition(const Word& w, const Decomposition& d);

Word decomposition_product(const Decomposition& d);

// Decomposition plus bounds and trace; verifies itself before returning.
AreaCertificate certify(const Word& w);

}  // namespace isoperim
