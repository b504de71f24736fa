#include "indshape/model/nat_eval.hpp"

#include <stdexcept>

namespace indshape::model {

using fol::FormulaKind;
using fol::FormulaPtr;
using fol::TermKind;
using fol::TermPtr;

Int nat_eval_term(const TermPtr& t, const NatEnv& env) {
  switch (t->kind()) {
    case TermKind::Var: {
      auto it = env.find(t->var_name());
      if (it == env.end()) throw std::out_of_range("unbound variable " + t->var_name());
      return it->second;
    }
    case TermKind::Zero: return 0;
    case TermKind::One: return 1;
    case TermKind::Add: return nat_eval_term(t->left(), env) + nat_eval_term(t->right(), env);
    case TermKind::Mul: return nat_eval_term(t->left(), env) * nat_eval_term(t->right(), env);
  }
  return 0;
}

bool nat_bounded_eval(const FormulaPtr& f, const NatEnv& env, const Int& bound) {
  switch (f->kind()) {
    case FormulaKind::Eq: return nat_eval_term(f->lhs(), env) == nat_eval_term(f->rhs(), env);
    case FormulaKind::Lt: return nat_eval_term(f->lhs(), env) < nat_eval_term(f->rhs(), env);
    case FormulaKind::Pred:
      throw std::invalid_argument("scheme templates cannot be evaluated");
    case FormulaKind::Not: return !nat_bounded_eval(f->left(), env, bound);
    case FormulaKind::And:
      return nat_bounded_eval(f->left(), env, bound) && nat_bounded_eval(f->right(), env, bound);
    case FormulaKind::Or:
      return nat_bounded_eval(f->left(), env, bound) || nat_bounded_eval(f->right(), env, bound);
    case FormulaKind::Implies:
      return !nat_bounded_eval(f->left(), env, bound) || nat_bounded_eval(f->right(), env, bound);
    case FormulaKind::Iff:
      return nat_bounded_eval(f->left(), env, bound) == nat_bounded_eval(f->right(), env, bound);
    case FormulaKind::ForAll: {
      NatEnv env2 = env;
      for (Int m = 0; m <= bound; ++m) {
        env2[f->bound_var()] = m;
        if (!nat_bounded_eval(f->body(), env2, bound)) return false;
      }
      return true;
    }
    case FormulaKind::Exists: {
      NatEnv env2 = env;
      for (Int m = 0; m <= bound; ++m) {
        env2[f->bound_var()] = m;
        if (nat_bounded_eval(f->body(), env2, bound)) return true;
      }
      return false;
    }
  }
  return false;
}

std::set<unsigned long> reachable_points(const schemes::Notion& n, unsigned long bound) {
  using Kind = schemes::Notion::Kind;
  std::set<unsigned long> reached;
  auto add = [&reached, bound](unsigned long m) {
    return m <= bound && reached.insert(m).second;
  };

  switch (n.kind) {
    case Kind::LessThan:
      // Everything below a point forcing the point forces all of them.
      for (unsigned long m = 0; m <= bound; ++m) reached.insert(m);
      return reached;
    case Kind::Successor:
    case Kind::Cut:
    case Kind::ACut:
    case Kind::AMCut:
    case Kind::StepK:
    case Kind::KInduction:
    case Kind::PolyInd:
    case Kind::Generalized: break;
  }

  std::vector<unsigned long> bases;
  switch (n.kind) {
    case Kind::Successor:
    case Kind::Cut:
    case Kind::ACut:
    case Kind::AMCut:
    case Kind::PolyInd: bases = {0}; break;
    case Kind::StepK:
    case Kind::KInduction:
      for (unsigned long i = 0; i < n.k; ++i) bases.push_back(i);
      break;
    case Kind::Generalized: bases = n.bases; break;
    case Kind::LessThan: break;
  }
  for (unsigned long b : bases) add(b);

  bool changed = true;
  while (changed) {
    changed = false;
    switch (n.kind) {
      case Kind::Successor:
      case Kind::Cut:
      case Kind::ACut:
      case Kind::AMCut:
        for (unsigned long m = 0; m + 1 <= bound; ++m)
          if (reached.count(m)) changed = add(m + 1) || changed;
        break;
      case Kind::StepK:
        for (unsigned long m = 0; m + n.k <= bound; ++m)
          if (reached.count(m)) changed = add(m + n.k) || changed;
        break;
      case Kind::KInduction:
        for (unsigned long m = 0; m + n.k <= bound; ++m) {
          bool window = true;
          for (unsigned long i = 0; i < n.k && window; ++i) window = reached.count(m + i) > 0;
          if (window) changed = add(m + n.k) || changed;
        }
        break;
      case Kind::PolyInd:
        for (unsigned long m = 0; m <= bound; ++m) {
          if (!reached.count(m)) continue;
          for (unsigned long i = 0; i < n.k; ++i) {
            unsigned long image = n.k * m + i;
            if (image <= bound) changed = add(image) || changed;
          }
        }
        break;
      case Kind::Generalized:
        for (unsigned long m = 0; m <= bound; ++m) {
          if (!reached.count(m)) continue;
          for (const auto& t : n.steps) {
            NatEnv env;
            for (const auto& v : fol::term_vars(t)) env[v] = Int(m);
            Int image = nat_eval_term(t, env);
            if (image >= 0 && image <= Int(bound))
              changed = add(image.convert_to<unsigned long>()) || changed;
          }
        }
        break;
      case Kind::LessThan: break;
    }
  }
  return reached;
}

}  // namespace indshape::model
