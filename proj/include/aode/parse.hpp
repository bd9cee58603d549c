// Text input: equations in y and y', truncations in x, and constants.
//
// Grammar (standard precedence, ^ binds tightest and is right associative):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom (('^' | '**') unary)?
//   atom   := number | y | y' | D(y) | y(x) | diff(y(x), x) | x | z
//           | rootof(poly in Z) | O(x^e) | '(' expr ')'
// An optional "= rhs" is moved to the left-hand side.
#pragma once

#include <string>

#include "aode/poly.hpp"
#include "aode/series.hpp"

namespace aode {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line, column;
};

/// F(y, p) with p standing for y'. Coefficients may involve rootof(...).
BiPoly parse_equation(const std::string& text);

/// Finite Puiseux sum in x (or z), with an optional O(x^e) order term.
/// Coefficients live in `K` or in fields generated by rootof terms.
Series parse_truncation(const std::string& text, Point point = Point::zero);

/// A constant expression (rationals and rootof terms).
Elem parse_constant(const std::string& text);

/// Text that parse_equation maps back to F: y' for p, rootof(...) for generators.
std::string render_equation(const BiPoly& F);

}  // namespace aode
