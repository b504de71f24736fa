#ifndef INDSHAPE_TRANSFORMS_KAYE_HPP
#define INDSHAPE_TRANSFORMS_KAYE_HPP

#include "indshape/fol/dnf.hpp"
#include "indshape/fol/formula.hpp"

namespace indshape::transforms {

/**
 * Order-free reduction of a <-free conjunct to one equation and one
 * inequation. The term language has no subtraction, so each polynomial is
 * carried as a pair of sides:
 *
 *   all equalities s_j = t_j hold   iff  p_left = p_right
 *     where p_left = sum of s_j*s_j + t_j*t_j, p_right = sum of 2*s_j*t_j
 *     (the two sides of sum (s_j - t_j)^2 = 0)
 *
 *   all inequations u_j != v_j hold iff  q_left != q_right
 *     built from (1, 0) by (qL, qR) -> (qL*u + qR*v, qL*v + qR*u),
 *     the sign-split product of the differences.
 *
 * The empty conjunct gives p = (0, 0) and q = (1, 0): true everywhere.
 */
struct KayeReduced {
  fol::TermPtr p_left, p_right;
  fol::TermPtr q_left, q_right;

  fol::FormulaPtr equation() const { return fol::eq(p_left, p_right); }
  fol::FormulaPtr inequation() const { return fol::lnot(fol::eq(q_left, q_right)); }
  // The conjunct's characteristic formula: equation & inequation.
  fol::FormulaPtr characteristic() const { return fol::land(equation(), inequation()); }
};

KayeReduced kaye_reduce(const fol::DnfConjunct& c);

}  // namespace indshape::transforms

#endif
