#ifndef INDSHAPE_MODEL_ZX_EVAL_HPP
#define INDSHAPE_MODEL_ZX_EVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "indshape/fol/formula.hpp"
#include "indshape/model/poly.hpp"

namespace indshape::model {

enum class Truth { True, False, Unknown };

struct EvalResult {
  Truth value;
  std::string reason;  // set when value is Unknown

  static EvalResult yes() { return {Truth::True, {}}; }
  static EvalResult no() { return {Truth::False, {}}; }
  static EvalResult unknown(std::string r) { return {Truth::Unknown, std::move(r)}; }
};

struct ZxLimits {
  // Witness search box: candidates are elements of Z[X]+ with degree
  // <= max_degree and every |coefficient| <= max_coeff.
  int max_degree = 3;
  long max_coeff = 7;
  // Cap on universal-prefix assignments tried by refute_claim.
  size_t max_assignments = 20000;
  size_t dnf_cap = 1000000;
};

/**
 * Exact three-valued evaluation over Z[X]+. Quantifier-free formulas are
 * decided exactly. An existential over a quantifier-free body is decided
 * per DNF disjunct: a positive equality linear in the witness variable pins
 * it by exact polynomial division (no solution in Z[X]+ makes the disjunct
 * false); otherwise candidates from the search box are tried, and exhaustion
 * yields Unknown, never a bogus False. Universals are evaluated dually.
 *
 * If trace is non-null, one line per disjunct decision is appended.
 */
EvalResult zx_eval(const fol::FormulaPtr& f, const ZxEnv& env, const ZxLimits& lim = {},
                   std::vector<std::string>* trace = nullptr);

struct Counterexample {
  std::vector<std::pair<std::string, PolyPlus>> assignment;  // in binder order
  std::vector<std::string> trace;
};

/**
 * Searches for a Z[X]+ counterexample to a sentence !x1...!xn. body:
 * assignments from the search box are tried in graded order (by total
 * candidate index, then lexicographically; within one variable, candidates
 * are ordered by degree, then by coefficients from the leading one down,
 * each coefficient in the order 0, 1, -1, 2, -2, ...). Returns the first
 * assignment whose body evaluates to False, with the evaluation trace.
 */
std::optional<Counterexample> refute_claim(const fol::FormulaPtr& f,
                                           const ZxLimits& lim = {});

// The candidate box in its canonical enumeration order.
std::vector<PolyPlus> witness_candidates(const ZxLimits& lim);

}  // namespace indshape::model

#endif
