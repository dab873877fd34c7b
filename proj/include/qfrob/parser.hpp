#pragma once

#include <string_view>

#include "qfrob/errors.hpp"
#include "qfrob/polynomial.hpp"

namespace qfrob {

// Where an expression sits inside a larger document, for error positions.
struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

// Parses a polynomial expression over the given variable names (variable i
// of the result is names[i]).
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+' | '-') factor | power
//   power  := atom ('^' INTEGER)?
//   atom   := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
//
// Whitespace is insignificant. There is no implicit multiplication and no
// floating-point literal. Throws ParseError carrying line, column and the
// set of tokens that would have been accepted.
Polynomial parse_expression(std::string_view text, const VariableNames& names,
                            SourcePosition origin = {});

}  // namespace qfrob
