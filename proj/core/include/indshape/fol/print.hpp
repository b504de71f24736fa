#ifndef INDSHAPE_FOL_PRINT_HPP
#define INDSHAPE_FOL_PRINT_HPP

#include <string>

#include "indshape/fol/formula.hpp"

namespace indshape::fol {

// Minimal-parentheses text form. Maximal left-nested numeral subterms of
// value >= 2 are compacted to decimals; (0+1) stays "0 + 1" because a bare
// "1" reparses to the constant One, not to numeral(1).
std::string print_term(const TermPtr& t);

// parse_formula(print_text(f)) is alpha-equal to f. Bound variables are
// renamed v0, v1, ... in binder order (skipping any name that occurs free),
// so alpha-equal formulas print identically.
std::string print_text(const FormulaPtr& f);

// One fof(...) line, no numeral compaction: 0 -> zero, 1 -> one, + -> plus,
// * -> times, < -> less, = native; variables uppercased.
std::string print_tptp(const std::string& name, const std::string& role,
                       const FormulaPtr& f);

// The renaming used by the printers, exposed for tests and reports.
FormulaPtr canonicalize_bound(const FormulaPtr& f);

}  // namespace indshape::fol

#endif
