#pragma once

#include <string_view>

#include "lndlab/polyalg/polynomial.hpp"

namespace lnd::polyalg {

/// Parses the polynomial grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*      ('/' only by a nonzero constant)
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | identifier | 'I' | '(' expr ')'
///
/// Implicit multiplication is rejected. Throws ParseError or UnknownVariable.
Polynomial parse_poly(std::string_view src, const Ring& ring);

/// Parses a constant (no variables), e.g. a coordinate such as `1/2 - 3*I`.
Coeff parse_coeff(std::string_view src);

}  // namespace lnd::polyalg
