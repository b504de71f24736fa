#ifndef INDSHAPE_FOL_DNF_HPP
#define INDSHAPE_FOL_DNF_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "indshape/fol/formula.hpp"

namespace indshape::fol {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/**
 * One disjunct of a disjunctive normal form over the <-free sublanguage:
 * a conjunction of equalities s = t and inequations s != t. An empty
 * conjunct is true everywhere (the 0 = 0 convention).
 */
struct DnfConjunct {
  std::vector<std::pair<TermPtr, TermPtr>> equalities;
  std::vector<std::pair<TermPtr, TermPtr>> inequations;
};

/**
 * DNF of a quantifier-free <-free formula. The disjunction of the returned
 * conjuncts is equivalent to f in every model. Distribution is capped at
 * max_literals total literals; exceeding it raises ResourceLimitError.
 */
std::vector<DnfConjunct> to_dnf(const FormulaPtr& f, size_t max_literals = 1000000);

namespace detail {

// Signed atom; is_eq distinguishes s = t from s < t.
struct Literal {
  bool positive;
  bool is_eq;
  TermPtr lhs, rhs;
};

// Same distribution, but < atoms permitted. Used by the evaluators.
std::vector<std::vector<Literal>> dnf_literals(const FormulaPtr& f, size_t max_literals);

}  // namespace detail

}  // namespace indshape::fol

#endif
