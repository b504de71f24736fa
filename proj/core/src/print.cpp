#include "indshape/fol/print.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>

namespace indshape::fol {

namespace {

// Term precedence: + is 1, * is 2, leaves are 3; both operators associate left.
void term_text(const TermPtr& t, int min_prec, std::string& out) {
  if (auto n = numeral_value(t); n && *n >= 2) {
    out += std::to_string(*n);
    return;
  }
  switch (t->kind()) {
    case TermKind::Var: out += t->var_name(); return;
    case TermKind::Zero: out += '0'; return;
    case TermKind::One: out += '1'; return;
    case TermKind::Add: {
      bool paren = min_prec > 1;
      if (paren) out += '(';
      term_text(t->left(), 1, out);
      out += " + ";
      term_text(t->right(), 2, out);
      if (paren) out += ')';
      return;
    }
    case TermKind::Mul: {
      bool paren = min_prec > 2;
      if (paren) out += '(';
      term_text(t->left(), 2, out);
      out += " * ";
      term_text(t->right(), 3, out);
      if (paren) out += ')';
      return;
    }
  }
}

// Connective precedence: <-> 1, -> 2 (right assoc), | 3, & 4, ~ 5, atoms 6.
// A quantifier's body is a full formula, so a quantified subformula only
// avoids parentheses when nothing of the enclosing formula follows it
// (the `tail` flag).
void formula_text(const FormulaPtr& f, int min_prec, bool tail, std::string& out) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Lt:
      term_text(f->lhs(), 0, out);
      out += f->kind() == FormulaKind::Eq ? " = " : " < ";
      term_text(f->rhs(), 0, out);
      return;
    case FormulaKind::Pred:
      out += f->pred_name();
      out += '(';
      term_text(f->pred_arg(), 0, out);
      out += ')';
      return;
    case FormulaKind::Not:
      out += '~';
      formula_text(f->left(), 5, tail, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff: {
      int prec;
      const char* op;
      bool right_assoc = false;
      switch (f->kind()) {
        case FormulaKind::Iff: prec = 1; op = " <-> "; break;
        case FormulaKind::Implies: prec = 2; op = " -> "; right_assoc = true; break;
        case FormulaKind::Or: prec = 3; op = " | "; break;
        default: prec = 4; op = " & "; break;
      }
      bool paren = min_prec > prec;
      if (paren) out += '(';
      formula_text(f->left(), right_assoc ? prec + 1 : prec, false, out);
      out += op;
      formula_text(f->right(), right_assoc ? prec : prec + 1, paren || tail, out);
      if (paren) out += ')';
      return;
    }
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      bool paren = min_prec > 0 && !tail;
      if (paren) out += '(';
      out += f->kind() == FormulaKind::ForAll ? '!' : '?';
      out += f->bound_var();
      out += ". ";
      formula_text(f->body(), 0, true, out);
      if (paren) out += ')';
      return;
    }
  }
}

struct Renamer {
  std::set<std::string> taken;  // free names of the whole formula
  unsigned next = 0;

  std::string fresh() {
    for (;;) {
      std::string cand = "v" + std::to_string(next++);
      if (!taken.count(cand)) return cand;
    }
  }
};

TermPtr rename_term(const TermPtr& t, const std::map<std::string, std::string>& env) {
  switch (t->kind()) {
    case TermKind::Var: {
      auto it = env.find(t->var_name());
      return it == env.end() ? t : Term::var(it->second);
    }
    case TermKind::Zero:
    case TermKind::One: return t;
    case TermKind::Add:
      return Term::add(rename_term(t->left(), env), rename_term(t->right(), env));
    case TermKind::Mul:
      return Term::mul(rename_term(t->left(), env), rename_term(t->right(), env));
  }
  return t;
}

FormulaPtr rename_rec(const FormulaPtr& f, Renamer& r,
                      std::map<std::string, std::string>& env) {
  switch (f->kind()) {
    case FormulaKind::Eq: return eq(rename_term(f->lhs(), env), rename_term(f->rhs(), env));
    case FormulaKind::Lt: return lt(rename_term(f->lhs(), env), rename_term(f->rhs(), env));
    case FormulaKind::Pred: return pred(f->pred_name(), rename_term(f->pred_arg(), env));
    case FormulaKind::Not: return lnot(rename_rec(f->left(), r, env));
    case FormulaKind::And: {
      FormulaPtr l = rename_rec(f->left(), r, env);
      return land(std::move(l), rename_rec(f->right(), r, env));
    }
    case FormulaKind::Or: {
      FormulaPtr l = rename_rec(f->left(), r, env);
      return lor(std::move(l), rename_rec(f->right(), r, env));
    }
    case FormulaKind::Implies: {
      FormulaPtr l = rename_rec(f->left(), r, env);
      return implies(std::move(l), rename_rec(f->right(), r, env));
    }
    case FormulaKind::Iff: {
      FormulaPtr l = rename_rec(f->left(), r, env);
      return iff(std::move(l), rename_rec(f->right(), r, env));
    }
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      std::string name = r.fresh();
      auto old = env.find(f->bound_var());
      std::optional<std::string> saved;
      if (old != env.end()) saved = old->second;
      env[f->bound_var()] = name;
      FormulaPtr body = rename_rec(f->body(), r, env);
      if (saved) env[f->bound_var()] = *saved; else env.erase(f->bound_var());
      return f->kind() == FormulaKind::ForAll ? forall(std::move(name), std::move(body))
                                              : exists(std::move(name), std::move(body));
    }
  }
  return f;
}

std::string upper(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void tptp_term(const TermPtr& t, std::string& out) {
  switch (t->kind()) {
    case TermKind::Var: out += upper(t->var_name()); return;
    case TermKind::Zero: out += "zero"; return;
    case TermKind::One: out += "one"; return;
    case TermKind::Add:
      out += "plus(";
      tptp_term(t->left(), out);
      out += ", ";
      tptp_term(t->right(), out);
      out += ')';
      return;
    case TermKind::Mul:
      out += "times(";
      tptp_term(t->left(), out);
      out += ", ";
      tptp_term(t->right(), out);
      out += ')';
      return;
  }
}

void tptp_formula(const FormulaPtr& f, std::string& out) {
  switch (f->kind()) {
    case FormulaKind::Eq:
      tptp_term(f->lhs(), out);
      out += " = ";
      tptp_term(f->rhs(), out);
      return;
    case FormulaKind::Lt:
      out += "less(";
      tptp_term(f->lhs(), out);
      out += ", ";
      tptp_term(f->rhs(), out);
      out += ')';
      return;
    case FormulaKind::Pred:
      throw std::invalid_argument("predicate atoms have no TPTP form");
    case FormulaKind::Not:
      out += "~ ";
      if (is_atom(f->left())) {
        tptp_formula(f->left(), out);
      } else {
        out += '(';
        tptp_formula(f->left(), out);
        out += ')';
      }
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff: {
      const char* op = f->kind() == FormulaKind::And       ? " & "
                       : f->kind() == FormulaKind::Or      ? " | "
                       : f->kind() == FormulaKind::Implies ? " => "
                                                           : " <=> ";
      out += '(';
      tptp_formula(f->left(), out);
      out += op;
      tptp_formula(f->right(), out);
      out += ')';
      return;
    }
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      out += f->kind() == FormulaKind::ForAll ? "! [" : "? [";
      out += upper(f->bound_var());
      out += "] : ";
      if (is_atom(f->body())) {
        tptp_formula(f->body(), out);
      } else {
        out += '(';
        tptp_formula(f->body(), out);
        out += ')';
      }
      return;
    }
  }
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  term_text(t, 0, out);
  return out;
}

FormulaPtr canonicalize_bound(const FormulaPtr& f) {
  Renamer r;
  r.taken = free_vars(f);
  std::map<std::string, std::string> env;
  return rename_rec(f, r, env);
}

std::string print_text(const FormulaPtr& f) {
  std::string out;
  formula_text(canonicalize_bound(f), 0, true, out);
  return out;
}

std::string print_tptp(const std::string& name, const std::string& role,
                       const FormulaPtr& f) {
  std::string out = "fof(" + name + ", " + role + ", ";
  tptp_formula(canonicalize_bound(f), out);
  out += ").";
  return out;
}

}  // namespace indshape::fol
