#pragma once

#include <string>
#include <string_view>

#include "galog/exponential.hpp"
#include "galog/multivector.hpp"

namespace galog {

// Parse a multivector expression: a sum of signed terms, each a rational or
// decimal coefficient times a basis monomial from {1, e1, e2, e3, e12, e13,
// e23, e123, I}.  Whitespace-insensitive; duplicate basis terms are summed.
// Examples: "-2+e1+e23-3e123", "9/10 - 1/3 e3", "1.5*e12".
// Exponent-style number literals are not accepted ("1e3" is 1*e3).
// Throws ParseError (with position) on anything else.
Multivector parse_mv(std::string_view text, Signature sig);

// Render at `digits` significant digits; parse(format_mv(a)) round-trips.
std::string format_mv(const Multivector& a, int digits = 10);

// Like format_mv, with affine coefficients rendered as "(f+g*log(0+))".
std::string format_extended(const ExtendedMultivector& a, int digits = 10);

}  // namespace galog
