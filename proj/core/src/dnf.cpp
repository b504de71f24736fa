#include "indshape/fol/dnf.hpp"

namespace indshape::fol {

namespace {

using detail::Literal;
using Dnf = std::vector<std::vector<Literal>>;

struct Budget {
  size_t used = 0;
  size_t cap;

  void charge(size_t n) {
    used += n;
    if (used > cap)
      throw ResourceLimitError("DNF exceeds the literal cap of " + std::to_string(cap));
  }
};

Dnf product(const Dnf& a, const Dnf& b, Budget& budget) {
  Dnf out;
  out.reserve(a.size() * b.size());
  for (const auto& ca : a) {
    for (const auto& cb : b) {
      budget.charge(ca.size() + cb.size());
      std::vector<Literal> c = ca;
      c.insert(c.end(), cb.begin(), cb.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

Dnf concat(Dnf a, Dnf b) {
  a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return a;
}

Dnf dnf_rec(const FormulaPtr& f, bool positive, Budget& budget) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Lt: {
      budget.charge(1);
      return {{Literal{positive, f->kind() == FormulaKind::Eq, f->lhs(), f->rhs()}}};
    }
    case FormulaKind::Pred:
      throw std::invalid_argument("scheme templates have no DNF");
    case FormulaKind::Not:
      return dnf_rec(f->left(), !positive, budget);
    case FormulaKind::And: {
      Dnf l = dnf_rec(f->left(), positive, budget);
      Dnf r = dnf_rec(f->right(), positive, budget);
      return positive ? product(l, r, budget) : concat(std::move(l), std::move(r));
    }
    case FormulaKind::Or: {
      Dnf l = dnf_rec(f->left(), positive, budget);
      Dnf r = dnf_rec(f->right(), positive, budget);
      return positive ? concat(std::move(l), std::move(r)) : product(l, r, budget);
    }
    case FormulaKind::Implies: {
      Dnf l = dnf_rec(f->left(), !positive, budget);
      Dnf r = dnf_rec(f->right(), positive, budget);
      return positive ? concat(std::move(l), std::move(r)) : product(l, r, budget);
    }
    case FormulaKind::Iff: {
      // (a & b) | (~a & ~b) when positive, (a & ~b) | (~a & b) otherwise
      Dnf app = dnf_rec(f->left(), true, budget);
      Dnf apn = dnf_rec(f->left(), false, budget);
      Dnf bpp = dnf_rec(f->right(), positive, budget);
      Dnf bpn = dnf_rec(f->right(), !positive, budget);
      return concat(product(app, bpp, budget), product(apn, bpn, budget));
    }
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
      throw std::invalid_argument("DNF requires a quantifier-free formula");
  }
  return {};
}

bool has_less(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Pred: return false;
    case FormulaKind::Lt: return true;
    case FormulaKind::Not: return has_less(f->left());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return has_less(f->left()) || has_less(f->right());
    case FormulaKind::ForAll:
    case FormulaKind::Exists: return has_less(f->body());
  }
  return false;
}

}  // namespace

namespace detail {

std::vector<std::vector<Literal>> dnf_literals(const FormulaPtr& f, size_t max_literals) {
  Budget budget{0, max_literals};
  return dnf_rec(f, true, budget);
}

}  // namespace detail

std::vector<DnfConjunct> to_dnf(const FormulaPtr& f, size_t max_literals) {
  if (!is_quantifier_free(f))
    throw std::invalid_argument("DNF requires a quantifier-free formula");
  if (has_less(f))
    throw std::invalid_argument("DNF is defined over the <-free sublanguage");
  Budget budget{0, max_literals};
  Dnf raw = dnf_rec(f, true, budget);
  std::vector<DnfConjunct> out;
  out.reserve(raw.size());
  for (auto& conj : raw) {
    DnfConjunct c;
    for (auto& lit : conj) {
      auto& dst = lit.positive ? c.equalities : c.inequations;
      dst.emplace_back(lit.lhs, lit.rhs);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace indshape::fol
