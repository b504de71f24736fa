#ifndef INDSHAPE_PROVER_SATURATE_HPP
#define INDSHAPE_PROVER_SATURATE_HPP

#include <cstddef>

#include "indshape/prover/clausify.hpp"
#include "indshape/prover/verdict.hpp"

namespace indshape::prover {

struct BuiltinLimits {
  std::size_t max_clauses = 50000;
  double max_seconds = 10.0;
  // Every age_weight_ratio-th given clause is the oldest passive one instead
  // of the lightest, so heavy consequences are not starved by a flood of
  // light rearrangement equations. 0 picks by weight only.
  std::size_t age_weight_ratio = 5;
};

/**
 * Given-clause saturation with negative-literal selection: a clause with
 * negative literals only ever resolves on its first negative literal,
 * against a clause made of positive literals; positive clauses also factor.
 * Kept clauses are normalized, demodulated by orientable unit equations,
 * and discarded when a kept clause subsumes them. Clause queue is ordered
 * by symbol weight, ties by age.
 *
 * Proved when the empty clause appears; Refuted(saturated) when the queue
 * runs dry; Unknown on the clause or time limit.
 */
Verdict saturate(const std::vector<Clause>& input, const BuiltinLimits& limits);

}  // namespace indshape::prover

#endif
