#pragma once

#include <string>

#include "affhecke/hecke.hpp"

namespace affhecke {

// Canonical text form: terms joined by " + ", each
//   [coefficient *] [T[reduced word]] [* X^[exponent list]]
// with the coefficient parenthesized when it is a sum or starts with a
// minus sign, and omitted when it equals 1 and the term has a T or X part.
// Terms are ordered by decreasing Coxeter length, then one-line notation,
// then graded-lex on exponents. The zero element prints as "0".
std::string element_to_string(const HeckeElement& h);

// Parses the grammar above. Exponent lists must have length n+1 and are
// renormalized; T words must be reduced words.
HeckeElement parse_element(const Algebra& algebra, const std::string& text);

}  // namespace affhecke
