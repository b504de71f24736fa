#ifndef INDSHAPE_TRANSFORMS_TRANSFORMS_HPP
#define INDSHAPE_TRANSFORMS_TRANSFORMS_HPP

#include <string>
#include <vector>

#include "indshape/fol/formula.hpp"

namespace indshape::transforms {

/**
 * Turns an arbitrary induction target theta(x, params) into a formula with
 * free variable exactly x that is inductive whenever theta's own base and
 * step hold:
 *
 *   !params. (theta(0) & !y. (theta(y) -> theta(y+1)) -> theta(x))
 *
 * y is chosen fresh.
 */
fol::FormulaPtr axiom_to_inductive(const fol::FormulaPtr& theta, const std::string& x,
                                   const std::vector<std::string>& params);

struct MergeEntry {
  fol::FormulaPtr theta;
  std::string x;
  std::vector<std::string> params;
};

/**
 * Left fold of conjunction over the normalizations of the entries, all
 * renamed to the first entry's induction variable. One inductive formula
 * then carries every target at once. Rejects an empty list.
 */
fol::FormulaPtr merge(const std::vector<MergeEntry>& entries);

/**
 * ~sigma -> psi for a closed sigma: inductive when psi is, and its
 * universal closure yields sigma outright.
 */
fol::FormulaPtr equivalence_shape(const fol::FormulaPtr& sigma, const fol::FormulaPtr& psi);

/**
 * A sentence over the term language extended with one unary predicate
 * symbol; the placeholder atoms mark where a concrete formula is plugged in.
 */
struct SchemeTemplate {
  fol::FormulaPtr sentence;
};

/**
 * Replaces every placeholder atom X(t) in the template by phi[x := t]
 * (capture-avoiding on both sides), then closes universally over params.
 * The template must use a single predicate symbol.
 */
fol::FormulaPtr scheme_substitute(const SchemeTemplate& tmpl, const fol::FormulaPtr& phi,
                                  const std::string& x, const std::vector<std::string>& params);

/**
 * Named witness constructions. phi (and delta where used) are formulas in
 * one free variable x; m and n are the numeric knobs of chi and rho.
 *
 *   not_cut  phi(x) | ?c. (delta(c) & c*c <= x)
 *   not_acut ?c. ?z. (phi(z) & delta(c) & x <= c*c + z)
 *   chi      phi(x) | ?y. x = (m+1)*y
 *   rho      phi(x) | !c. (delta(c) -> x = c*c | ... | x = c*c + n)
 *   rho0     rho with the single disjunct x = c*c
 *   square   phi(x*x)
 */
struct GalleryInputs {
  fol::FormulaPtr phi;
  fol::FormulaPtr delta;  // may be null when the construction ignores it
  std::string x = "x";
  unsigned long m = 0;
  unsigned long n = 0;
};

fol::FormulaPtr gallery(const std::string& name, const GalleryInputs& in);

const std::vector<std::string>& gallery_names();

}  // namespace indshape::transforms

#endif
