#ifndef INDSHAPE_SCHEMES_PA_MINUS_HPP
#define INDSHAPE_SCHEMES_PA_MINUS_HPP

#include <vector>

#include "indshape/fol/formula.hpp"

namespace indshape::schemes {

/**
 * The sixteen base axioms of ordered semirings with a discrete positive part:
 * associativity/commutativity/distributivity, neutral elements, the order
 * axioms, compatibility of < with + and *, the subtraction characterisation
 * of <, and discreteness at 0 and 1. Index is 1-based via pa_minus_axiom.
 */
const std::vector<fol::FormulaPtr>& pa_minus_axioms();

fol::FormulaPtr pa_minus_axiom(int index);  // 1..16

}  // namespace indshape::schemes

#endif
