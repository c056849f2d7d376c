#pragma once

#include <string_view>

#include "motbun/motive_expr.hpp"

namespace motbun {

// Parses the expression language (whitespace-insensitive):
//
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := atom | atom '{' int '}' | 'Sym' '^' nat '(' expr ')'
//           | 'SymStar' '(' expr ')' | 'Z' '(' 'C' ',' 'L' '^' int ')'
//   atom   := '1' | 'L' | 'L' '^' int | 'M(C)' | 'Mbar(C)' | 'M1(Jac)' | 'Jac'
//           | 'BGm' | 'BGmC' | 'P(' nat ')' | '(' expr ')'
//
// 'L^i' is Q{i}; the printer emits it for twists other than 1. Throws
// SyntaxError (kind SyntaxError or ArityError) with the offending position.
MotiveExpr parse(std::string_view text);

}  // namespace motbun
