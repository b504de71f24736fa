#ifndef INDSHAPE_PROVER_CLAUSIFY_HPP
#define INDSHAPE_PROVER_CLAUSIFY_HPP

#include <memory>
#include <string>
#include <vector>

#include "indshape/fol/formula.hpp"

namespace indshape::prover {

/**
 * Clause-level term: a variable or a function application. The signature
 * after translation is zero/0, one/0, plus/2, times/2 and Skolem symbols
 * sk0, sk1, ...; predicates are eq/2 and less/2.
 */
struct PTerm;
using PTermPtr = std::shared_ptr<const PTerm>;

struct PTerm {
  bool is_var = false;
  std::string name;
  std::vector<PTermPtr> args;
};

PTermPtr pvar(std::string name);
PTermPtr papp(std::string name, std::vector<PTermPtr> args = {});

bool pterm_equal(const PTermPtr& a, const PTermPtr& b);
std::string pterm_text(const PTermPtr& t);
std::size_t pterm_weight(const PTermPtr& t);

struct Literal {
  bool positive = true;
  std::string pred;  // "eq" or "less"
  PTermPtr lhs, rhs;
};

bool literal_equal(const Literal& a, const Literal& b);
std::string literal_text(const Literal& l);

/**
 * Clause: implicit universal closure of a disjunction of literals. id and
 * provenance are filled by the saturation loop.
 */
struct Clause {
  std::vector<Literal> literals;
  std::size_t id = 0;
  std::string rule;            // "input", "resolve", "factor", "demod"
  std::vector<std::size_t> parents;
  bool goal = false;           // from the negated goal, or derived from one
};

std::string clause_text(const Clause& c);
std::size_t clause_weight(const Clause& c);

/**
 * NNF, inside-out Skolemization, CNF of axioms plus the negated goal.
 * Clauses come out in order: equality_axioms() first, then the axioms,
 * then the negated goal. Throws ResourceLimitError when distribution
 * would exceed max_clauses.
 */
std::vector<Clause> clausify(const std::vector<fol::FormulaPtr>& axioms,
                             const fol::FormulaPtr& goal, std::size_t max_clauses);

// Just reflexivity. Symmetry, transitivity, and congruence are not axioms;
// the saturation engine handles them by paramodulation.
std::vector<Clause> equality_axioms();

}  // namespace indshape::prover

#endif
