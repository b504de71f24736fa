#ifndef INDSHAPE_FOL_FORMULA_HPP
#define INDSHAPE_FOL_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "indshape/fol/term.hpp"

namespace indshape::fol {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class FormulaKind { Eq, Lt, Pred, Not, And, Or, Implies, Iff, ForAll, Exists };

/**
 * Immutable formula over {0, 1, +, *, <, =}. The Pred kind is a unary
 * predicate atom and appears only in scheme templates; every operation
 * outside the template machinery rejects it.
 */
class Formula {
 public:
  FormulaKind kind() const { return kind_; }

  // Eq / Lt / Pred
  const TermPtr& lhs() const { return lhs_; }
  const TermPtr& rhs() const { return rhs_; }
  const std::string& pred_name() const { return name_; }
  const TermPtr& pred_arg() const { return lhs_; }

  // connectives; right() is null for Not
  const FormulaPtr& left() const { return fleft_; }
  const FormulaPtr& right() const { return fright_; }

  // quantifiers
  const std::string& bound_var() const { return name_; }
  const FormulaPtr& body() const { return fleft_; }

 private:
  friend FormulaPtr eq(TermPtr, TermPtr);
  friend FormulaPtr lt(TermPtr, TermPtr);
  friend FormulaPtr pred(std::string, TermPtr);
  friend FormulaPtr lnot(FormulaPtr);
  friend FormulaPtr land(FormulaPtr, FormulaPtr);
  friend FormulaPtr lor(FormulaPtr, FormulaPtr);
  friend FormulaPtr implies(FormulaPtr, FormulaPtr);
  friend FormulaPtr iff(FormulaPtr, FormulaPtr);
  friend FormulaPtr forall(std::string, FormulaPtr);
  friend FormulaPtr exists(std::string, FormulaPtr);

  explicit Formula(FormulaKind k) : kind_(k) {}

  static FormulaPtr make_binary(FormulaKind k, FormulaPtr l, FormulaPtr r);
  static FormulaPtr make_quantifier(FormulaKind k, std::string v, FormulaPtr body);

  FormulaKind kind_;
  std::string name_;
  TermPtr lhs_, rhs_;
  FormulaPtr fleft_, fright_;
};

FormulaPtr eq(TermPtr l, TermPtr r);
FormulaPtr lt(TermPtr l, TermPtr r);
FormulaPtr pred(std::string name, TermPtr arg);
FormulaPtr lnot(FormulaPtr f);
FormulaPtr land(FormulaPtr l, FormulaPtr r);
FormulaPtr lor(FormulaPtr l, FormulaPtr r);
FormulaPtr implies(FormulaPtr l, FormulaPtr r);
FormulaPtr iff(FormulaPtr l, FormulaPtr r);
FormulaPtr forall(std::string v, FormulaPtr body);
FormulaPtr exists(std::string v, FormulaPtr body);

// s <= t as the abbreviation s < t | s = t.
FormulaPtr leq(const TermPtr& l, const TermPtr& r);

// Left fold of And/Or over a nonempty list; the empty list is the
// convention 0 = 0 (for And) resp. its negation (for Or).
FormulaPtr conjoin(const std::vector<FormulaPtr>& fs);
FormulaPtr disjoin(const std::vector<FormulaPtr>& fs);

std::set<std::string> free_vars(const FormulaPtr& f);
// Every name appearing anywhere: free, bound, or shadowed.
std::set<std::string> all_names(const FormulaPtr& f);

bool contains_pred(const FormulaPtr& f);
bool contains_less(const FormulaPtr& f);
bool is_atom(const FormulaPtr& f);
bool is_quantifier_free(const FormulaPtr& f);

// Capture-avoiding substitution of term t for free occurrences of v.
// Binders that would capture a variable of t are renamed first.
FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& t);

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

// base itself if unused, else base_1, base_2, ...
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

size_t formula_size(const FormulaPtr& f);

}  // namespace indshape::fol

#endif
