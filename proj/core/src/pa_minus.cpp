#include "indshape/schemes/pa_minus.hpp"

#include <stdexcept>

#include "indshape/fol/parse.hpp"

namespace indshape::schemes {

const std::vector<fol::FormulaPtr>& pa_minus_axioms() {
  static const std::vector<fol::FormulaPtr> axioms = [] {
    const char* const text[16] = {
        "!x. !y. !z. (x + y) + z = x + (y + z)",
        "!x. !y. x + y = y + x",
        "!x. !y. !z. (x * y) * z = x * (y * z)",
        "!x. !y. x * y = y * x",
        "!x. !y. !z. x * (y + z) = x * y + x * z",
        "!x. x + 0 = x",
        "!x. x * 0 = 0",
        "!x. x * 1 = x",
        "!x. !y. !z. (x < y & y < z -> x < z)",
        "!x. ~(x < x)",
        "!x. !y. (x < y | x = y | y < x)",
        "!x. !y. !z. (x < y -> x + z < y + z)",
        "!x. !y. !z. (~(z = 0) & x < y -> x * z < y * z)",
        "!x. !y. (x < y <-> ?z. (x + z) + 1 = y)",
        "0 < 1 & !x. (0 < x -> 1 < x | 1 = x)",
        "!x. (0 < x | 0 = x)",
    };
    std::vector<fol::FormulaPtr> out;
    out.reserve(16);
    for (const char* t : text) out.push_back(fol::parse_formula(t));
    return out;
  }();
  return axioms;
}

fol::FormulaPtr pa_minus_axiom(int index) {
  if (index < 1 || index > 16) throw std::out_of_range("axiom index must be in 1..16");
  return pa_minus_axioms()[static_cast<std::size_t>(index - 1)];
}

}  // namespace indshape::schemes
