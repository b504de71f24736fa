#ifndef INDSHAPE_SCHEMES_SCHEMES_HPP
#define INDSHAPE_SCHEMES_SCHEMES_HPP

#include <string>
#include <vector>

#include "indshape/fol/classify.hpp"
#include "indshape/fol/formula.hpp"
#include "indshape/schemes/notion.hpp"
#include "indshape/schemes/pa_minus.hpp"

namespace indshape::schemes {

/**
 * The induction axiom for theta(x, params) under notion n: the universal
 * closure over params of (bases ∧ steps) -> !x. theta. Rejects cut-style
 * notions (those are obligation-only) and templates containing a predicate
 * atom. Empty conjunction blocks appear as 0 = 0.
 *
 * params must cover every free variable of theta other than x; unused
 * parameter names are closed over anyway.
 */
fol::FormulaPtr induction_axiom(const fol::FormulaPtr& theta, const std::string& x,
                                const std::vector<std::string>& params, const Notion& n);

/**
 * One proof burden. Discharging an ObligationSet means proving every goal
 * from the sixteen base axioms plus the obligation's own hypotheses.
 */
struct Obligation {
  std::string tag;  // "base:k", "step", "step:i", "downward", "double", "square"
  std::vector<fol::FormulaPtr> hypotheses;
  fol::FormulaPtr goal;
};

struct ObligationSet {
  std::vector<Obligation> obligations;

  // Background theory every goal is judged against.
  static const std::vector<fol::FormulaPtr>& axioms() { return pa_minus_axioms(); }
};

/**
 * What must hold for phi(x) to be inductive in the sense of n. phi may use
 * no free variable besides x. Tags are unique within the set; a Generalized
 * notion with several step terms numbers them step:1, step:2, ...
 */
ObligationSet inductiveness_obligations(const fol::FormulaPtr& phi, const std::string& x,
                                        const Notion& n);

/**
 * Subset test on Generalized notions: left's bases and step terms all occur
 * in right's. Sound for "every induction axiom of right follows from left's
 * scheme", and deliberately syntactic, hence incomplete. Both arguments must
 * be Generalized.
 */
bool walther_subsumes(const Notion& left, const Notion& right);

/**
 * On-demand scheme slice: keeps the thetas whose class is within cls (and,
 * when less_free is set, which avoid <), then instantiates n for each with
 * induction variable "x" and the remaining free variables as parameters in
 * sorted order.
 */
std::vector<fol::FormulaPtr> scheme_instances(const fol::FormulaClass& cls, const Notion& n,
                                              const std::vector<fol::FormulaPtr>& thetas,
                                              bool less_free = false);

}  // namespace indshape::schemes

#endif
