#include "indshape/fol/formula.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace indshape::fol {

FormulaPtr eq(TermPtr l, TermPtr r) {
  if (!l || !r) throw std::invalid_argument("null term in atom");
  auto f = std::shared_ptr<Formula>(new Formula(FormulaKind::Eq));
  f->lhs_ = std::move(l);
  f->rhs_ = std::move(r);
  return f;
}

FormulaPtr lt(TermPtr l, TermPtr r) {
  if (!l || !r) throw std::invalid_argument("null term in atom");
  auto f = std::shared_ptr<Formula>(new Formula(FormulaKind::Lt));
  f->lhs_ = std::move(l);
  f->rhs_ = std::move(r);
  return f;
}

FormulaPtr pred(std::string name, TermPtr arg) {
  if (!arg) throw std::invalid_argument("null term in atom");
  if (name.empty()) throw std::invalid_argument("predicate name must be nonempty");
  auto f = std::shared_ptr<Formula>(new Formula(FormulaKind::Pred));
  f->name_ = std::move(name);
  f->lhs_ = std::move(arg);
  return f;
}

FormulaPtr lnot(FormulaPtr g) {
  if (!g) throw std::invalid_argument("null subformula");
  auto f = std::shared_ptr<Formula>(new Formula(FormulaKind::Not));
  f->fleft_ = std::move(g);
  return f;
}

FormulaPtr Formula::make_binary(FormulaKind k, FormulaPtr l, FormulaPtr r) {
  if (!l || !r) throw std::invalid_argument("null subformula");
  auto f = std::shared_ptr<Formula>(new Formula(k));
  f->fleft_ = std::move(l);
  f->fright_ = std::move(r);
  return f;
}

FormulaPtr land(FormulaPtr l, FormulaPtr r) {
  return Formula::make_binary(FormulaKind::And, std::move(l), std::move(r));
}
FormulaPtr lor(FormulaPtr l, FormulaPtr r) {
  return Formula::make_binary(FormulaKind::Or, std::move(l), std::move(r));
}
FormulaPtr implies(FormulaPtr l, FormulaPtr r) {
  return Formula::make_binary(FormulaKind::Implies, std::move(l), std::move(r));
}
FormulaPtr iff(FormulaPtr l, FormulaPtr r) {
  return Formula::make_binary(FormulaKind::Iff, std::move(l), std::move(r));
}

FormulaPtr Formula::make_quantifier(FormulaKind k, std::string v, FormulaPtr body) {
  if (!body) throw std::invalid_argument("null subformula");
  if (v.empty()) throw std::invalid_argument("variable name must be nonempty");
  auto f = std::shared_ptr<Formula>(new Formula(k));
  f->name_ = std::move(v);
  f->fleft_ = std::move(body);
  return f;
}

FormulaPtr forall(std::string v, FormulaPtr body) {
  return Formula::make_quantifier(FormulaKind::ForAll, std::move(v), std::move(body));
}
FormulaPtr exists(std::string v, FormulaPtr body) {
  return Formula::make_quantifier(FormulaKind::Exists, std::move(v), std::move(body));
}

FormulaPtr leq(const TermPtr& l, const TermPtr& r) { return lor(lt(l, r), eq(l, r)); }

FormulaPtr conjoin(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return eq(Term::zero(), Term::zero());
  FormulaPtr acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = land(acc, fs[i]);
  return acc;
}

FormulaPtr disjoin(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return lnot(eq(Term::zero(), Term::zero()));
  FormulaPtr acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = lor(acc, fs[i]);
  return acc;
}

static void free_vars_rec(const FormulaPtr& f, std::set<std::string>& bound,
                          std::set<std::string>& out) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Lt: {
      std::set<std::string> tv;
      collect_term_vars(f->lhs(), tv);
      collect_term_vars(f->rhs(), tv);
      for (auto& v : tv)
        if (!bound.count(v)) out.insert(v);
      break;
    }
    case FormulaKind::Pred: {
      std::set<std::string> tv;
      collect_term_vars(f->pred_arg(), tv);
      for (auto& v : tv)
        if (!bound.count(v)) out.insert(v);
      break;
    }
    case FormulaKind::Not:
      free_vars_rec(f->left(), bound, out);
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      free_vars_rec(f->left(), bound, out);
      free_vars_rec(f->right(), bound, out);
      break;
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      bool fresh = bound.insert(f->bound_var()).second;
      free_vars_rec(f->body(), bound, out);
      if (fresh) bound.erase(f->bound_var());
      break;
    }
  }
}

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

static void all_names_rec(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Lt:
      collect_term_vars(f->lhs(), out);
      collect_term_vars(f->rhs(), out);
      break;
    case FormulaKind::Pred:
      collect_term_vars(f->pred_arg(), out);
      break;
    case FormulaKind::Not:
      all_names_rec(f->left(), out);
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      all_names_rec(f->left(), out);
      all_names_rec(f->right(), out);
      break;
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
      out.insert(f->bound_var());
      all_names_rec(f->body(), out);
      break;
  }
}

std::set<std::string> all_names(const FormulaPtr& f) {
  std::set<std::string> out;
  all_names_rec(f, out);
  return out;
}

bool contains_pred(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Lt: return false;
    case FormulaKind::Pred: return true;
    case FormulaKind::Not: return contains_pred(f->left());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return contains_pred(f->left()) || contains_pred(f->right());
    case FormulaKind::ForAll:
    case FormulaKind::Exists: return contains_pred(f->body());
  }
  return false;
}

bool contains_less(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Pred: return false;
    case FormulaKind::Lt: return true;
    case FormulaKind::Not: return contains_less(f->left());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return contains_less(f->left()) || contains_less(f->right());
    case FormulaKind::ForAll:
    case FormulaKind::Exists: return contains_less(f->body());
  }
  return false;
}

bool is_atom(const FormulaPtr& f) {
  return f->kind() == FormulaKind::Eq || f->kind() == FormulaKind::Lt ||
         f->kind() == FormulaKind::Pred;
}

bool is_quantifier_free(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Lt:
    case FormulaKind::Pred: return true;
    case FormulaKind::Not: return is_quantifier_free(f->left());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return is_quantifier_free(f->left()) && is_quantifier_free(f->right());
    case FormulaKind::ForAll:
    case FormulaKind::Exists: return false;
  }
  return false;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (unsigned long i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& t) {
  switch (f->kind()) {
    case FormulaKind::Eq:
      return eq(replace_var(f->lhs(), v, t), replace_var(f->rhs(), v, t));
    case FormulaKind::Lt:
      return lt(replace_var(f->lhs(), v, t), replace_var(f->rhs(), v, t));
    case FormulaKind::Pred:
      return pred(f->pred_name(), replace_var(f->pred_arg(), v, t));
    case FormulaKind::Not:
      return lnot(substitute(f->left(), v, t));
    case FormulaKind::And:
      return land(substitute(f->left(), v, t), substitute(f->right(), v, t));
    case FormulaKind::Or:
      return lor(substitute(f->left(), v, t), substitute(f->right(), v, t));
    case FormulaKind::Implies:
      return implies(substitute(f->left(), v, t), substitute(f->right(), v, t));
    case FormulaKind::Iff:
      return iff(substitute(f->left(), v, t), substitute(f->right(), v, t));
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      const std::string& y = f->bound_var();
      if (y == v) return f;  // v is shadowed below this binder
      std::set<std::string> body_free = free_vars(f->body());
      if (!body_free.count(v)) return f;
      std::set<std::string> tv = term_vars(t);
      FormulaPtr body = f->body();
      std::string y2 = y;
      if (tv.count(y)) {
        // Binder would capture a variable of t: rename it out of the way.
        std::set<std::string> avoid = all_names(body);
        avoid.insert(tv.begin(), tv.end());
        avoid.insert(v);
        y2 = fresh_name(y, avoid);
        body = substitute(body, y, Term::var(y2));
      }
      body = substitute(body, v, t);
      return f->kind() == FormulaKind::ForAll ? forall(y2, body) : exists(y2, body);
    }
  }
  return f;
}

namespace {

struct AlphaEnv {
  std::map<std::string, unsigned> a, b;
  unsigned level = 0;
};

bool alpha_term(const TermPtr& s, const TermPtr& t, const AlphaEnv& env) {
  if (s->kind() != t->kind()) return false;
  switch (s->kind()) {
    case TermKind::Var: {
      auto ia = env.a.find(s->var_name());
      auto ib = env.b.find(t->var_name());
      if (ia != env.a.end() || ib != env.b.end())
        return ia != env.a.end() && ib != env.b.end() && ia->second == ib->second;
      return s->var_name() == t->var_name();
    }
    case TermKind::Zero:
    case TermKind::One: return true;
    case TermKind::Add:
    case TermKind::Mul:
      return alpha_term(s->left(), t->left(), env) && alpha_term(s->right(), t->right(), env);
  }
  return false;
}

bool alpha_rec(const FormulaPtr& f, const FormulaPtr& g, AlphaEnv& env) {
  if (f->kind() != g->kind()) return false;
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Lt:
      return alpha_term(f->lhs(), g->lhs(), env) && alpha_term(f->rhs(), g->rhs(), env);
    case FormulaKind::Pred:
      return f->pred_name() == g->pred_name() && alpha_term(f->pred_arg(), g->pred_arg(), env);
    case FormulaKind::Not:
      return alpha_rec(f->left(), g->left(), env);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return alpha_rec(f->left(), g->left(), env) && alpha_rec(f->right(), g->right(), env);
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      unsigned lv = env.level++;
      auto olda = env.a.find(f->bound_var());
      auto oldb = env.b.find(g->bound_var());
      std::optional<unsigned> sa, sb;
      if (olda != env.a.end()) sa = olda->second;
      if (oldb != env.b.end()) sb = oldb->second;
      env.a[f->bound_var()] = lv;
      env.b[g->bound_var()] = lv;
      bool ok = alpha_rec(f->body(), g->body(), env);
      if (sa) env.a[f->bound_var()] = *sa; else env.a.erase(f->bound_var());
      if (sb) env.b[g->bound_var()] = *sb; else env.b.erase(g->bound_var());
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  AlphaEnv env;
  return alpha_rec(a, b, env);
}

size_t formula_size(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Lt: return 1 + term_size(f->lhs()) + term_size(f->rhs());
    case FormulaKind::Pred: return 1 + term_size(f->pred_arg());
    case FormulaKind::Not: return 1 + formula_size(f->left());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return 1 + formula_size(f->left()) + formula_size(f->right());
    case FormulaKind::ForAll:
    case FormulaKind::Exists: return 1 + formula_size(f->body());
  }
  return 1;
}

}  // namespace indshape::fol
