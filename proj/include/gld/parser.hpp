#pragma once

#include <string_view>

#include "gld/polynomial.hpp"

namespace gld {

/// Parses a polynomial over Q[x1..xm, t1..td].
///
/// Grammar: rational literals (`3`, `-1/2`), variables `x1..xm` and
/// `t1..td`, binary `+ - *`, non-negative integer powers `^`, and
/// parentheses. Multiplication must be explicit (`2*x1`, never `2x1`).
/// Throws ParseError carrying the 1-based column of the offending character.
Polynomial parse_polynomial(std::string_view text, RingSignature sig);

}  // namespace gld
