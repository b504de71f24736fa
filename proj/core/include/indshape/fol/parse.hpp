#ifndef INDSHAPE_FOL_PARSE_HPP
#define INDSHAPE_FOL_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "indshape/fol/formula.hpp"

namespace indshape::fol {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

/**
 * Text grammar:
 *   term    := '0' | '1' | decimal | ident | term '+' term | term '*' term | '(' term ')'
 *   atom    := term ('=' | '<' | '<=' | '>' | '>=') term
 *   formula := atom | '~' f | f '&' f | f '|' f | f '->' f | f '<->' f
 *            | ('!' | '?') ident '.' f | '(' f ')'
 * Precedence ~ > & > | > -> (right assoc) > <->; quantifier scope is maximal.
 * s <= t elaborates to s < t | s = t; > and >= are the flipped forms.
 * Decimal literals expand to left-nested numerals.
 */
FormulaPtr parse_formula(std::string_view text);

// Same grammar plus unary predicate atoms ident '(' term ')', for scheme
// templates (e.g. "X(0) & !y.(X(y) -> X(y+1)) -> !y. X(y)").
FormulaPtr parse_template(std::string_view text);

TermPtr parse_term(std::string_view text);

}  // namespace indshape::fol

#endif
