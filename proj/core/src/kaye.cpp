#include "indshape/transforms/kaye.hpp"

namespace indshape::transforms {

using fol::Term;
using fol::TermPtr;

namespace {

bool is_zero(const TermPtr& t) { return t->kind() == fol::TermKind::Zero; }
bool is_one(const TermPtr& t) { return t->kind() == fol::TermKind::One; }

// Value-preserving peepholes; without them the q fold drags 1* and 0*
// factors through every product.
TermPtr sadd(const TermPtr& a, const TermPtr& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  return Term::add(a, b);
}

TermPtr smul(const TermPtr& a, const TermPtr& b) {
  if (is_zero(a) || is_zero(b)) return Term::zero();
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  return Term::mul(a, b);
}

}  // namespace

KayeReduced kaye_reduce(const fol::DnfConjunct& c) {
  KayeReduced out;
  out.p_left = Term::zero();
  out.p_right = Term::zero();
  for (const auto& [s, t] : c.equalities) {
    // (s - t)^2 split into its positive and negative monomials.
    out.p_left = sadd(sadd(out.p_left, Term::mul(s, s)), Term::mul(t, t));
    out.p_right = sadd(out.p_right, smul(fol::numeral(2), Term::mul(s, t)));
  }

  out.q_left = Term::one();
  out.q_right = Term::zero();
  for (const auto& [u, v] : c.inequations) {
    TermPtr ql = sadd(smul(out.q_left, u), smul(out.q_right, v));
    TermPtr qr = sadd(smul(out.q_left, v), smul(out.q_right, u));
    out.q_left = std::move(ql);
    out.q_right = std::move(qr);
  }
  return out;
}

}  // namespace indshape::transforms
