#pragma once

#include <cstddef>
#include <string_view>

#include "pfaff/poly.hpp"

namespace pfaff {

// Parses one right-hand-side component over x1..xm, y1..yn.
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := '-' factor | atom ('^' uint)?
//   atom     := rational | var | '(' expr ')'
//   var      := 'x' uint | 'y' uint
//   rational := int ('/' uint)?
//
// '^' binds tighter than unary '-', which binds tighter than '*'. Juxtaposition
// ("x1 y1", "2x1") is a syntax error. Throws ParseError with the offending
// column, or when a variable index exceeds m or n.
Poly parse_expression(std::string_view text, std::size_t m, std::size_t n);

}  // namespace pfaff
