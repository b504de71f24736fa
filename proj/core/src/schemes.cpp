#include "indshape/schemes/schemes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace indshape::schemes {

using fol::FormulaPtr;
using fol::TermPtr;

namespace {

using fol::nat_term;

FormulaPtr at(const FormulaPtr& theta, const std::string& x, const TermPtr& t) {
  return fol::substitute(theta, x, t);
}

// x + k, dropping "+ 0".
TermPtr shifted(const TermPtr& x, unsigned long k) {
  if (k == 0) return x;
  return fol::Term::add(x, nat_term(k));
}

void check_template(const FormulaPtr& theta, const std::string& x,
                    const std::vector<std::string>& params) {
  if (fol::contains_pred(theta))
    throw std::invalid_argument("induction formulas may not contain a predicate template");
  std::set<std::string> declared(params.begin(), params.end());
  if (declared.size() != params.size())
    throw std::invalid_argument("duplicate parameter name");
  if (declared.count(x)) throw std::invalid_argument("induction variable listed as a parameter");
  for (const auto& v : fol::free_vars(theta)) {
    if (v == x) continue;
    if (!declared.count(v))
      throw std::invalid_argument("free variable '" + v + "' is not a declared parameter");
  }
}

void check_step_term(const TermPtr& t, const std::string& x,
                     const std::vector<std::string>& params) {
  std::set<std::string> allowed(params.begin(), params.end());
  allowed.insert(x);
  for (const auto& v : fol::term_vars(t)) {
    if (!allowed.count(v))
      throw std::invalid_argument("step term uses undeclared variable '" + v + "'");
  }
}

std::string fresh_binder(const char* base, const FormulaPtr& theta, const std::string& x,
                         const std::vector<std::string>& params) {
  std::set<std::string> avoid = fol::all_names(theta);
  avoid.insert(x);
  avoid.insert(params.begin(), params.end());
  return fol::fresh_name(base, avoid);
}

struct AxiomParts {
  std::vector<FormulaPtr> bases;
  std::vector<FormulaPtr> steps;
};

AxiomParts build_parts(const FormulaPtr& theta, const std::string& x,
                       const std::vector<std::string>& params, const Notion& n) {
  AxiomParts parts;
  const TermPtr vx = fol::Term::var(x);
  switch (n.kind) {
    case Notion::Kind::Successor:
      parts.bases.push_back(at(theta, x, fol::Term::zero()));
      parts.steps.push_back(fol::forall(x, fol::implies(theta, at(theta, x, shifted(vx, 1)))));
      break;
    case Notion::Kind::LessThan: {
      std::string y = fresh_binder("y", theta, x, params);
      const TermPtr vy = fol::Term::var(y);
      FormulaPtr below = fol::forall(x, fol::implies(fol::lt(vx, vy), theta));
      parts.steps.push_back(fol::forall(y, fol::implies(below, at(theta, x, vy))));
      break;
    }
    case Notion::Kind::StepK:
      for (unsigned long i = 0; i < n.k; ++i) parts.bases.push_back(at(theta, x, nat_term(i)));
      parts.steps.push_back(fol::forall(x, fol::implies(theta, at(theta, x, shifted(vx, n.k)))));
      break;
    case Notion::Kind::KInduction: {
      for (unsigned long i = 0; i < n.k; ++i) parts.bases.push_back(at(theta, x, nat_term(i)));
      std::vector<FormulaPtr> window;
      for (unsigned long i = 0; i < n.k; ++i) window.push_back(at(theta, x, shifted(vx, i)));
      parts.steps.push_back(fol::forall(
          x, fol::implies(fol::conjoin(window), at(theta, x, shifted(vx, n.k)))));
      break;
    }
    case Notion::Kind::PolyInd: {
      parts.bases.push_back(at(theta, x, fol::Term::zero()));
      std::vector<FormulaPtr> images;
      for (unsigned long i = 0; i < n.k; ++i) {
        TermPtr scaled = fol::Term::mul(nat_term(n.k), vx);
        images.push_back(at(theta, x, i == 0 ? scaled : fol::Term::add(scaled, nat_term(i))));
      }
      parts.steps.push_back(fol::forall(x, fol::implies(theta, fol::conjoin(images))));
      break;
    }
    case Notion::Kind::Generalized:
      for (unsigned long b : n.bases) parts.bases.push_back(at(theta, x, nat_term(b)));
      for (const auto& t : n.steps) {
        check_step_term(t, x, params);
        parts.steps.push_back(fol::forall(x, fol::implies(theta, at(theta, x, t))));
      }
      break;
    case Notion::Kind::Cut:
    case Notion::Kind::ACut:
    case Notion::Kind::AMCut:
      throw std::invalid_argument("cut-style notions have no axiom form; ask for obligations");
  }
  return parts;
}

}  // namespace

FormulaPtr induction_axiom(const FormulaPtr& theta, const std::string& x,
                           const std::vector<std::string>& params, const Notion& n) {
  check_template(theta, x, params);
  AxiomParts parts = build_parts(theta, x, params, n);

  FormulaPtr antecedent;
  if (n.kind == Notion::Kind::LessThan) {
    antecedent = parts.steps.front();
  } else {
    antecedent = fol::land(fol::conjoin(parts.bases), fol::conjoin(parts.steps));
  }
  FormulaPtr axiom = fol::implies(antecedent, fol::forall(x, theta));
  for (auto it = params.rbegin(); it != params.rend(); ++it) axiom = fol::forall(*it, axiom);
  return axiom;
}

ObligationSet inductiveness_obligations(const FormulaPtr& phi, const std::string& x,
                                        const Notion& n) {
  for (const auto& v : fol::free_vars(phi)) {
    if (v != x)
      throw std::invalid_argument("inductiveness is defined for one free variable; found '" + v +
                                  "'");
  }
  if (fol::contains_pred(phi))
    throw std::invalid_argument("induction formulas may not contain a predicate template");

  const std::vector<std::string> no_params;
  ObligationSet set;
  auto add = [&set](std::string tag, FormulaPtr goal) {
    set.obligations.push_back(Obligation{std::move(tag), {}, std::move(goal)});
  };
  const TermPtr vx = fol::Term::var(x);

  auto successor_pair = [&] {
    add("base:0", at(phi, x, fol::Term::zero()));
    add("step", fol::forall(x, fol::implies(phi, at(phi, x, shifted(vx, 1)))));
  };

  switch (n.kind) {
    case Notion::Kind::Successor:
      successor_pair();
      break;
    case Notion::Kind::LessThan:
    case Notion::Kind::StepK:
    case Notion::Kind::KInduction:
    case Notion::Kind::PolyInd: {
      AxiomParts parts = build_parts(phi, x, no_params, n);
      for (std::size_t i = 0; i < parts.bases.size(); ++i)
        add("base:" + std::to_string(i), parts.bases[i]);
      add("step", parts.steps.front());
      break;
    }
    case Notion::Kind::Generalized: {
      AxiomParts parts = build_parts(phi, x, no_params, n);
      for (std::size_t i = 0; i < n.bases.size(); ++i)
        add("base:" + std::to_string(n.bases[i]), parts.bases[i]);
      for (std::size_t i = 0; i < parts.steps.size(); ++i) {
        add(parts.steps.size() == 1 ? std::string("step") : "step:" + std::to_string(i + 1),
            parts.steps[i]);
      }
      break;
    }
    case Notion::Kind::Cut:
    case Notion::Kind::ACut:
    case Notion::Kind::AMCut: {
      successor_pair();
      std::string y = fresh_binder("y", phi, x, no_params);
      const TermPtr vy = fol::Term::var(y);
      add("downward",
          fol::forall(x, fol::forall(y, fol::implies(fol::land(fol::lt(vx, vy), at(phi, x, vy)),
                                                     phi))));
      if (n.kind == Notion::Kind::ACut || n.kind == Notion::Kind::AMCut)
        add("double", fol::forall(x, fol::implies(phi, at(phi, x, fol::Term::add(vx, vx)))));
      if (n.kind == Notion::Kind::AMCut)
        add("square", fol::forall(x, fol::implies(phi, at(phi, x, fol::Term::mul(vx, vx)))));
      break;
    }
  }
  return set;
}

bool walther_subsumes(const Notion& left, const Notion& right) {
  if (left.kind != Notion::Kind::Generalized || right.kind != Notion::Kind::Generalized)
    throw std::invalid_argument("subsumption compares gen notions only");
  for (unsigned long b : left.bases) {
    if (std::find(right.bases.begin(), right.bases.end(), b) == right.bases.end()) return false;
  }
  for (const auto& s : left.steps) {
    bool found = false;
    for (const auto& t : right.steps) {
      if (fol::term_equal(s, t)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<FormulaPtr> scheme_instances(const fol::FormulaClass& cls, const Notion& n,
                                         const std::vector<FormulaPtr>& thetas, bool less_free) {
  std::vector<FormulaPtr> out;
  for (const auto& theta : thetas) {
    if (fol::contains_pred(theta)) continue;
    if (less_free && fol::contains_less(theta)) continue;
    fol::FormulaClass actual = fol::classify(theta);
    if (!fol::class_within(actual, cls)) continue;

    std::vector<std::string> params;
    for (const auto& v : fol::free_vars(theta))
      if (v != "x") params.push_back(v);
    std::sort(params.begin(), params.end());
    out.push_back(induction_axiom(theta, "x", params, n));
  }
  return out;
}

}  // namespace indshape::schemes
