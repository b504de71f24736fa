#include "indshape/model/zx_eval.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "indshape/fol/dnf.hpp"
#include "indshape/fol/print.hpp"

namespace indshape::model {

using fol::FormulaKind;
using fol::FormulaPtr;
using fol::TermKind;
using fol::TermPtr;
using detail::ZPoly;

namespace {

// Polynomial in the witness variable with Z[X] coefficients: index = power
// of the witness variable. Empty = zero.
using YPoly = std::vector<ZPoly>;

void ytrim(YPoly& p) {
  while (!p.empty() && detail::zp_is_zero(p.back())) p.pop_back();
}

YPoly yadd(const YPoly& a, const YPoly& b) {
  YPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = detail::zp_add(out[i], a[i]);
    if (i < b.size()) out[i] = detail::zp_add(out[i], b[i]);
  }
  ytrim(out);
  return out;
}

YPoly ysub(const YPoly& a, const YPoly& b) {
  YPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] = detail::zp_add(out[i], a[i]);
    if (i < b.size()) out[i] = detail::zp_sub(out[i], b[i]);
  }
  ytrim(out);
  return out;
}

YPoly ymul(const YPoly& a, const YPoly& b) {
  if (a.empty() || b.empty()) return {};
  YPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = detail::zp_add(out[i + j], detail::zp_mul(a[i], b[j]));
  ytrim(out);
  return out;
}

YPoly yterm(const TermPtr& t, const std::string& var, const ZxEnv& env) {
  switch (t->kind()) {
    case TermKind::Var:
      if (t->var_name() == var) return {ZPoly{}, ZPoly{1}};
      return {poly_eval(t, env).coeffs()};
    case TermKind::Zero: return {};
    case TermKind::One: return {ZPoly{1}};
    case TermKind::Add: return yadd(yterm(t->left(), var, env), yterm(t->right(), var, env));
    case TermKind::Mul: return ymul(yterm(t->left(), var, env), yterm(t->right(), var, env));
  }
  return {};
}

std::string atom_text(const fol::detail::Literal& lit) {
  FormulaPtr atom = lit.is_eq ? fol::eq(lit.lhs, lit.rhs) : fol::lt(lit.lhs, lit.rhs);
  std::string s = fol::print_text(lit.positive ? atom : fol::lnot(atom));
  return s;
}

bool literal_holds(const fol::detail::Literal& lit, const ZxEnv& env) {
  PolyPlus l = poly_eval(lit.lhs, env), r = poly_eval(lit.rhs, env);
  bool v = lit.is_eq ? l == r : l.less(r);
  return lit.positive ? v : !v;
}

void note(std::vector<std::string>* trace, std::string line) {
  if (trace) trace->push_back(std::move(line));
}

EvalResult eval_exists(const std::string& var, const FormulaPtr& body, const ZxEnv& env,
                       const ZxLimits& lim, std::vector<std::string>* trace);

EvalResult eval_rec(const FormulaPtr& f, const ZxEnv& env, const ZxLimits& lim,
                    std::vector<std::string>* trace) {
  switch (f->kind()) {
    case FormulaKind::Eq:
      return poly_eval(f->lhs(), env) == poly_eval(f->rhs(), env) ? EvalResult::yes()
                                                                  : EvalResult::no();
    case FormulaKind::Lt:
      return poly_eval(f->lhs(), env).less(poly_eval(f->rhs(), env)) ? EvalResult::yes()
                                                                     : EvalResult::no();
    case FormulaKind::Pred:
      throw std::invalid_argument("scheme templates cannot be evaluated");
    case FormulaKind::Not: {
      EvalResult r = eval_rec(f->left(), env, lim, trace);
      if (r.value == Truth::True) return EvalResult::no();
      if (r.value == Truth::False) return EvalResult::yes();
      return r;
    }
    case FormulaKind::And: {
      EvalResult l = eval_rec(f->left(), env, lim, trace);
      if (l.value == Truth::False) return EvalResult::no();
      EvalResult r = eval_rec(f->right(), env, lim, trace);
      if (r.value == Truth::False) return EvalResult::no();
      if (l.value == Truth::Unknown) return l;
      return r;
    }
    case FormulaKind::Or: {
      EvalResult l = eval_rec(f->left(), env, lim, trace);
      if (l.value == Truth::True) return EvalResult::yes();
      EvalResult r = eval_rec(f->right(), env, lim, trace);
      if (r.value == Truth::True) return EvalResult::yes();
      if (l.value == Truth::Unknown) return l;
      return r;
    }
    case FormulaKind::Implies: {
      EvalResult l = eval_rec(f->left(), env, lim, trace);
      if (l.value == Truth::False) return EvalResult::yes();
      EvalResult r = eval_rec(f->right(), env, lim, trace);
      if (r.value == Truth::True) return EvalResult::yes();
      if (l.value == Truth::True && r.value == Truth::False) return EvalResult::no();
      return l.value == Truth::Unknown ? l : r;
    }
    case FormulaKind::Iff: {
      EvalResult l = eval_rec(f->left(), env, lim, trace);
      EvalResult r = eval_rec(f->right(), env, lim, trace);
      if (l.value == Truth::Unknown) return l;
      if (r.value == Truth::Unknown) return r;
      return l.value == r.value ? EvalResult::yes() : EvalResult::no();
    }
    case FormulaKind::Exists:
      return eval_exists(f->bound_var(), f->body(), env, lim, trace);
    case FormulaKind::ForAll: {
      note(trace, "!" + f->bound_var() + ": dualized to ?" + f->bound_var() +
                      " over the negated body");
      EvalResult r = eval_exists(f->bound_var(), fol::lnot(f->body()), env, lim, trace);
      if (r.value == Truth::True) return EvalResult::no();
      if (r.value == Truth::False) return EvalResult::yes();
      return r;
    }
  }
  return EvalResult::unknown("unreachable");
}

// One DNF disjunct of an existential body. Returns True/False exactly when
// decided; Unknown only after an exhausted search.
EvalResult eval_disjunct(const std::string& var,
                         const std::vector<fol::detail::Literal>& lits, const ZxEnv& env,
                         const ZxLimits& lim, std::vector<std::string>* trace,
                         const std::string& label) {
  std::vector<const fol::detail::Literal*> with_var;
  for (const auto& lit : lits) {
    bool uses_var = fol::term_vars(lit.lhs).count(var) || fol::term_vars(lit.rhs).count(var);
    if (!uses_var) {
      if (!literal_holds(lit, env)) {
        note(trace, label + ": contradicts " + atom_text(lit));
        return EvalResult::no();
      }
    } else {
      with_var.push_back(&lit);
    }
  }
  if (with_var.empty()) {
    note(trace, label + ": holds with no constraint on " + var);
    return EvalResult::yes();
  }

  // (a) a positive equality linear in var pins the witness exactly
  bool saw_nonlinear = false;
  for (const auto* lit : with_var) {
    if (!lit->positive || !lit->is_eq) continue;
    YPoly d = ysub(yterm(lit->lhs, var, env), yterm(lit->rhs, var, env));
    std::string where = label + ": equation " + fol::print_term(lit->lhs) + " = " +
                        fol::print_term(lit->rhs);
    if (d.empty()) continue;  // identically satisfied
    if (d.size() == 1) {
      note(trace, where + ": contradictory, " + var + " cancels");
      return EvalResult::no();
    }
    if (d.size() > 2) {
      saw_nonlinear = true;
      continue;
    }
    // a*var + b = 0 over Z[X]
    auto q = detail::zp_div_exact(detail::zp_neg(d[0]), d[1]);
    if (!q) {
      note(trace, where + ": exact division fails, no solution in Z[X]");
      return EvalResult::no();
    }
    if (!q->empty() && q->back() < 0) {
      note(trace, where + ": solution " + detail::zp_to_string(*q) + " is not in Z[X]+");
      return EvalResult::no();
    }
    PolyPlus w = PolyPlus::from_coeffs(*q);
    ZxEnv env2 = env;
    env2[var] = w;
    for (const auto* other : with_var) {
      if (other == lit) continue;
      if (!literal_holds(*other, env2)) {
        note(trace, where + ": pinned " + var + " = " + w.to_string() + " fails " +
                        atom_text(*other));
        return EvalResult::no();
      }
    }
    note(trace, where + ": witness " + var + " = " + w.to_string());
    return EvalResult::yes();
  }

  // (b) bounded search over the candidate box
  ZxEnv env2 = env;
  for (const PolyPlus& cand : witness_candidates(lim)) {
    env2[var] = cand;
    bool ok = true;
    for (const auto* lit : with_var) {
      if (!literal_holds(*lit, env2)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      note(trace, label + ": witness " + var + " = " + cand.to_string() + " found by search");
      return EvalResult::yes();
    }
  }
  std::string why = saw_nonlinear ? "nonlinear in " + var : "no pinning equality on " + var;
  note(trace, label + ": " + why + ", no witness with degree <= " +
                  std::to_string(lim.max_degree) + " and |coeff| <= " +
                  std::to_string(lim.max_coeff));
  return EvalResult::unknown("witness search exhausted for " + var);
}

EvalResult eval_exists(const std::string& var, const FormulaPtr& body, const ZxEnv& env,
                       const ZxLimits& lim, std::vector<std::string>* trace) {
  if (fol::is_quantifier_free(body)) {
    auto dnf = fol::detail::dnf_literals(body, lim.dnf_cap);
    EvalResult out = EvalResult::no();
    for (size_t i = 0; i < dnf.size(); ++i) {
      std::string label = "?" + var + ": disjunct " + std::to_string(i + 1) + "/" +
                          std::to_string(dnf.size());
      EvalResult r = eval_disjunct(var, dnf[i], env, lim, trace, label);
      if (r.value == Truth::True) return r;
      if (r.value == Truth::Unknown) out = r;
    }
    return out;
  }
  // Nested quantifiers: search only; exhaustion cannot conclude False.
  ZxEnv env2 = env;
  for (const PolyPlus& cand : witness_candidates(lim)) {
    env2[var] = cand;
    EvalResult r = eval_rec(body, env2, lim, nullptr);
    if (r.value == Truth::True) {
      note(trace, "?" + var + ": witness " + var + " = " + cand.to_string() +
                      " found by search (nested body)");
      return EvalResult::yes();
    }
  }
  note(trace, "?" + var + ": nested body, search exhausted");
  return EvalResult::unknown("witness search exhausted for " + var);
}

}  // namespace

std::vector<PolyPlus> witness_candidates(const ZxLimits& lim) {
  std::vector<PolyPlus> out;
  std::vector<Int> coeff_order;  // 0, 1, -1, 2, -2, ...
  coeff_order.push_back(0);
  for (long c = 1; c <= lim.max_coeff; ++c) {
    coeff_order.push_back(c);
    coeff_order.push_back(-c);
  }
  out.push_back(PolyPlus());
  for (long c = 1; c <= lim.max_coeff; ++c) out.push_back(PolyPlus::constant(c));
  for (int deg = 1; deg <= lim.max_degree; ++deg) {
    // leading coefficient 1..max_coeff, then lower coefficients from the
    // top down, each running through coeff_order
    std::vector<size_t> idx(static_cast<size_t>(deg), 0);
    for (long lead = 1; lead <= lim.max_coeff; ++lead) {
      for (;;) {
        ZPoly c(static_cast<size_t>(deg) + 1);
        c[static_cast<size_t>(deg)] = lead;
        for (int p = 0; p < deg; ++p)
          c[static_cast<size_t>(deg - 1 - p)] = coeff_order[idx[static_cast<size_t>(p)]];
        out.push_back(PolyPlus::from_coeffs(std::move(c)));
        // odometer over idx, most significant first
        int p = deg - 1;
        while (p >= 0) {
          if (++idx[static_cast<size_t>(p)] < coeff_order.size()) break;
          idx[static_cast<size_t>(p)] = 0;
          --p;
        }
        if (p < 0) break;
      }
    }
  }
  return out;
}

EvalResult zx_eval(const FormulaPtr& f, const ZxEnv& env, const ZxLimits& lim,
                   std::vector<std::string>* trace) {
  return eval_rec(f, env, lim, trace);
}

std::optional<Counterexample> refute_claim(const FormulaPtr& f, const ZxLimits& lim) {
  std::vector<std::string> vars;
  FormulaPtr body = f;
  while (body->kind() == FormulaKind::ForAll) {
    vars.push_back(body->bound_var());
    body = body->body();
  }
  std::vector<PolyPlus> cands = witness_candidates(lim);

  size_t tried = 0;
  std::optional<Counterexample> found;
  std::vector<size_t> idx(vars.size(), 0);
  auto attempt = [&](const std::vector<size_t>& ix) -> std::optional<Counterexample> {
    ZxEnv env;
    for (size_t v = 0; v < vars.size(); ++v) env[vars[v]] = cands[ix[v]];
    EvalResult r = zx_eval(body, env, lim, nullptr);
    if (r.value != Truth::False) return std::nullopt;
    Counterexample cex;
    std::vector<std::string> tr;
    for (size_t v = 0; v < vars.size(); ++v) {
      cex.assignment.emplace_back(vars[v], cands[ix[v]]);
      tr.push_back("try " + vars[v] + " = " + cands[ix[v]].to_string());
    }
    zx_eval(body, env, lim, &tr);
    tr.push_back("false at this assignment");
    cex.trace = std::move(tr);
    return cex;
  };

  if (vars.empty()) {
    EvalResult r = zx_eval(body, {}, lim, nullptr);
    if (r.value != Truth::False) return std::nullopt;
    Counterexample cex;
    zx_eval(body, {}, lim, &cex.trace);
    cex.trace.push_back("false at this assignment");
    return cex;
  }

  // graded enumeration: total index sum s, then lexicographic
  size_t max_sum = vars.size() * (cands.size() - 1);
  for (size_t s = 0; s <= max_sum; ++s) {
    // enumerate idx vectors with sum s lexicographically
    std::fill(idx.begin(), idx.end(), 0);
    // place s into idx respecting per-component bound
    // standard multi-radix composition enumeration
    std::function<bool(size_t, size_t)> walk = [&](size_t pos, size_t rem) -> bool {
      if (tried >= lim.max_assignments) return true;  // aborts the walk
      if (pos + 1 == idx.size()) {
        if (rem >= cands.size()) return false;
        idx[pos] = rem;
        ++tried;
        if (auto cex = attempt(idx)) {
          found = std::move(cex);
          return true;
        }
        return false;
      }
      size_t top = std::min(rem, cands.size() - 1);
      for (size_t v = 0; v <= top; ++v) {
        idx[pos] = v;
        if (walk(pos + 1, rem - v)) return true;
      }
      return false;
    };
    if (walk(0, s)) break;
    if (tried >= lim.max_assignments) break;
  }
  return found;
}

}  // namespace indshape::model
