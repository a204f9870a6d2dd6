#pragma once

// Text forms of group ring elements.
//
// Expressions: integers, x, y, + - *, ^ with a nonnegative integer exponent,
// parentheses, and juxtaposition as multiplication ("3x^2"). The value is
// computed in Z[G], so products such as "x*y" fold through the group
// relations, and exponents of x may exceed the order of x.
//
// Raw form: "a0,a1,...;b0,b1,..." lists the coefficients of f and g; the
// cyclic family takes one list and no ';'. Lists longer than the modulus fold.

#include <string>

#include "gdet/groupring.hpp"

namespace gdet {

// Throws ParseError (a UsageError) with the byte offset of the problem.
RingElement parse_element(const GroupSpec& g, const std::string& text);

// Raw form, e.g. "1,-1,0,0,0,0;1,0,0,1,0,0".
std::string serialize_element(const RingElement& a);

// Expression form, e.g. "1 - x + y*(1 + x^3)".
std::string format_element(const RingElement& a);

// "1 - x + x^3"; "0" for the zero polynomial.
std::string format_poly(const CyclicPoly& p);

}  // namespace gdet
