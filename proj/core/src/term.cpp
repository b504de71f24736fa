#include "indshape/fol/term.hpp"

#include <stdexcept>

namespace indshape::fol {

TermPtr Term::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  auto t = std::shared_ptr<Term>(new Term(TermKind::Var));
  t->name_ = std::move(name);
  return t;
}

TermPtr Term::zero() {
  static const TermPtr z = std::shared_ptr<Term>(new Term(TermKind::Zero));
  return z;
}

TermPtr Term::one() {
  static const TermPtr o = std::shared_ptr<Term>(new Term(TermKind::One));
  return o;
}

TermPtr Term::add(TermPtr l, TermPtr r) {
  if (!l || !r) throw std::invalid_argument("null subterm");
  auto t = std::shared_ptr<Term>(new Term(TermKind::Add));
  t->left_ = std::move(l);
  t->right_ = std::move(r);
  return t;
}

TermPtr Term::mul(TermPtr l, TermPtr r) {
  if (!l || !r) throw std::invalid_argument("null subterm");
  auto t = std::shared_ptr<Term>(new Term(TermKind::Mul));
  t->left_ = std::move(l);
  t->right_ = std::move(r);
  return t;
}

TermPtr numeral(unsigned long n) {
  TermPtr t = Term::zero();
  for (unsigned long i = 0; i < n; ++i) t = Term::add(t, Term::one());
  return t;
}

TermPtr nat_term(unsigned long n) {
  if (n == 0) return Term::zero();
  if (n == 1) return Term::one();
  return numeral(n);
}

std::optional<unsigned long> numeral_value(const TermPtr& t) {
  unsigned long ones = 0;
  const Term* cur = t.get();
  while (cur->kind() == TermKind::Add) {
    if (cur->right()->kind() != TermKind::One) return std::nullopt;
    ++ones;
    cur = cur->left().get();
  }
  if (cur->kind() != TermKind::Zero) return std::nullopt;
  return ones;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Var: return a->var_name() == b->var_name();
    case TermKind::Zero:
    case TermKind::One: return true;
    case TermKind::Add:
    case TermKind::Mul:
      return term_equal(a->left(), b->left()) && term_equal(a->right(), b->right());
  }
  return false;
}

void collect_term_vars(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Var: out.insert(t->var_name()); break;
    case TermKind::Zero:
    case TermKind::One: break;
    case TermKind::Add:
    case TermKind::Mul:
      collect_term_vars(t->left(), out);
      collect_term_vars(t->right(), out);
      break;
  }
}

std::set<std::string> term_vars(const TermPtr& t) {
  std::set<std::string> out;
  collect_term_vars(t, out);
  return out;
}

TermPtr replace_var(const TermPtr& t, const std::string& v, const TermPtr& r) {
  switch (t->kind()) {
    case TermKind::Var: return t->var_name() == v ? r : t;
    case TermKind::Zero:
    case TermKind::One: return t;
    case TermKind::Add: {
      TermPtr l = replace_var(t->left(), v, r), rr = replace_var(t->right(), v, r);
      if (l.get() == t->left().get() && rr.get() == t->right().get()) return t;
      return Term::add(std::move(l), std::move(rr));
    }
    case TermKind::Mul: {
      TermPtr l = replace_var(t->left(), v, r), rr = replace_var(t->right(), v, r);
      if (l.get() == t->left().get() && rr.get() == t->right().get()) return t;
      return Term::mul(std::move(l), std::move(rr));
    }
  }
  return t;
}

size_t term_size(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Var:
    case TermKind::Zero:
    case TermKind::One: return 1;
    case TermKind::Add:
    case TermKind::Mul: return 1 + term_size(t->left()) + term_size(t->right());
  }
  return 1;
}

}  // namespace indshape::fol
