#ifndef INDSHAPE_MODEL_NAT_EVAL_HPP
#define INDSHAPE_MODEL_NAT_EVAL_HPP

#include <map>
#include <set>
#include <string>

#include "indshape/fol/formula.hpp"
#include "indshape/model/poly.hpp"
#include "indshape/schemes/notion.hpp"

namespace indshape::model {

using NatEnv = std::map<std::string, Int>;

// Exact value of a term in N under env; throws std::out_of_range on an
// unbound variable.
Int nat_eval_term(const fol::TermPtr& t, const NatEnv& env);

/**
 * Truth in N with every quantifier relativized to {0, ..., bound}. Terms are
 * evaluated exactly (arbitrary precision), so only the quantifier ranges are
 * approximate. This is the desk-scale sanity oracle: for quantifier-free
 * formulas it is simply truth in N at the given point.
 */
bool nat_bounded_eval(const fol::FormulaPtr& f, const NatEnv& env, const Int& bound);

/**
 * The subset of {0..bound} a notion's step relation can force starting from
 * its bases: the least fixpoint of the base points and the step map,
 * truncated at the bound. Every variable of a gen step term is read as the
 * current point, so the check is meaningful for one-variable steps only.
 */
std::set<unsigned long> reachable_points(const schemes::Notion& n, unsigned long bound);

}  // namespace indshape::model

#endif
