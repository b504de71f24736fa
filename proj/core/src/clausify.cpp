#include "indshape/prover/clausify.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "indshape/fol/dnf.hpp"

namespace indshape::prover {

PTermPtr pvar(std::string name) {
  auto t = std::make_shared<PTerm>();
  t->is_var = true;
  t->name = std::move(name);
  return t;
}

PTermPtr papp(std::string name, std::vector<PTermPtr> args) {
  auto t = std::make_shared<PTerm>();
  t->name = std::move(name);
  t->args = std::move(args);
  return t;
}

bool pterm_equal(const PTermPtr& a, const PTermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_var != b->is_var || a->name != b->name) return false;
  if (a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!pterm_equal(a->args[i], b->args[i])) return false;
  return true;
}

std::string pterm_text(const PTermPtr& t) {
  if (t->is_var || t->args.empty()) return t->name;
  std::string out = t->name + "(";
  for (std::size_t i = 0; i < t->args.size(); ++i) {
    if (i) out += ",";
    out += pterm_text(t->args[i]);
  }
  return out + ")";
}

std::size_t pterm_weight(const PTermPtr& t) {
  std::size_t w = 1;
  for (const auto& a : t->args) w += pterm_weight(a);
  return w;
}

bool literal_equal(const Literal& a, const Literal& b) {
  return a.positive == b.positive && a.pred == b.pred && pterm_equal(a.lhs, b.lhs) &&
         pterm_equal(a.rhs, b.rhs);
}

std::string literal_text(const Literal& l) {
  std::string atom = l.pred + "(" + pterm_text(l.lhs) + "," + pterm_text(l.rhs) + ")";
  return l.positive ? atom : "~" + atom;
}

std::string clause_text(const Clause& c) {
  if (c.literals.empty()) return "[]";
  std::string out = "{";
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i) out += ", ";
    out += literal_text(c.literals[i]);
  }
  return out + "}";
}

std::size_t clause_weight(const Clause& c) {
  std::size_t w = 0;
  for (const auto& l : c.literals) w += 1 + pterm_weight(l.lhs) + pterm_weight(l.rhs);
  return w;
}

namespace {

using LitClause = std::vector<Literal>;

struct Ctx {
  std::size_t var_counter = 0;
  std::size_t sk_counter = 0;
  std::size_t max_clauses = 0;

  std::string fresh_var() { return "V" + std::to_string(var_counter++); }
  std::string fresh_sk() { return "sk" + std::to_string(sk_counter++); }
};

PTermPtr translate(const fol::TermPtr& t, const std::map<std::string, PTermPtr>& env) {
  switch (t->kind()) {
    case fol::TermKind::Var: {
      auto it = env.find(t->var_name());
      if (it == env.end())
        throw std::invalid_argument("unbound variable '" + t->var_name() + "' in proof input");
      return it->second;
    }
    case fol::TermKind::Zero: return papp("zero");
    case fol::TermKind::One: return papp("one");
    case fol::TermKind::Add:
      return papp("plus", {translate(t->left(), env), translate(t->right(), env)});
    case fol::TermKind::Mul:
      return papp("times", {translate(t->left(), env), translate(t->right(), env)});
  }
  throw std::logic_error("unreachable term kind");
}

// Adds l to the clause unless it is a duplicate or a trivially false
// equality; returns false when the literal makes the clause valid.
bool push_literal(LitClause& c, Literal l) {
  if (l.pred == "eq" && pterm_equal(l.lhs, l.rhs)) {
    if (l.positive) return false;  // clause is a tautology
    return true;                   // literal is false, drop it
  }
  for (const auto& have : c)
    if (literal_equal(have, l)) return true;
  c.push_back(std::move(l));
  return true;
}

std::vector<LitClause> merge_products(const std::vector<LitClause>& a,
                                      const std::vector<LitClause>& b, Ctx& ctx) {
  std::vector<LitClause> out;
  for (const auto& ca : a) {
    for (const auto& cb : b) {
      LitClause merged;
      bool keep = true;
      for (const auto& l : ca)
        if (!(keep = push_literal(merged, l))) break;
      if (keep)
        for (const auto& l : cb)
          if (!(keep = push_literal(merged, l))) break;
      if (keep) out.push_back(std::move(merged));
      if (out.size() > ctx.max_clauses)
        throw fol::ResourceLimitError("clause normal form exceeds the clause cap");
    }
  }
  return out;
}

std::vector<LitClause> concat(std::vector<LitClause> a, std::vector<LitClause> b, Ctx& ctx) {
  for (auto& c : b) a.push_back(std::move(c));
  if (a.size() > ctx.max_clauses)
    throw fol::ResourceLimitError("clause normal form exceeds the clause cap");
  return a;
}

std::vector<LitClause> cnf(const fol::FormulaPtr& f, bool positive,
                           std::map<std::string, PTermPtr>& env,
                           std::vector<PTermPtr>& universals, Ctx& ctx) {
  switch (f->kind()) {
    case fol::FormulaKind::Eq:
    case fol::FormulaKind::Lt: {
      Literal l;
      l.positive = positive;
      l.pred = f->kind() == fol::FormulaKind::Eq ? "eq" : "less";
      l.lhs = translate(f->lhs(), env);
      l.rhs = translate(f->rhs(), env);
      LitClause c;
      if (!push_literal(c, std::move(l))) return {};  // valid clause, drop
      return {std::move(c)};
    }
    case fol::FormulaKind::Pred:
      throw std::invalid_argument("templates cannot be sent to the prover");
    case fol::FormulaKind::Not:
      return cnf(f->left(), !positive, env, universals, ctx);
    case fol::FormulaKind::And:
      if (positive)
        return concat(cnf(f->left(), true, env, universals, ctx),
                      cnf(f->right(), true, env, universals, ctx), ctx);
      return merge_products(cnf(f->left(), false, env, universals, ctx),
                            cnf(f->right(), false, env, universals, ctx), ctx);
    case fol::FormulaKind::Or:
      if (positive)
        return merge_products(cnf(f->left(), true, env, universals, ctx),
                              cnf(f->right(), true, env, universals, ctx), ctx);
      return concat(cnf(f->left(), false, env, universals, ctx),
                    cnf(f->right(), false, env, universals, ctx), ctx);
    case fol::FormulaKind::Implies:
      if (positive)
        return merge_products(cnf(f->left(), false, env, universals, ctx),
                              cnf(f->right(), true, env, universals, ctx), ctx);
      return concat(cnf(f->left(), true, env, universals, ctx),
                    cnf(f->right(), false, env, universals, ctx), ctx);
    case fol::FormulaKind::Iff: {
      // (l -> r) & (r -> l) for the positive side, the xor for the negative.
      auto lr = merge_products(cnf(f->left(), !positive, env, universals, ctx),
                               cnf(f->right(), true, env, universals, ctx), ctx);
      auto rl = merge_products(cnf(f->right(), false, env, universals, ctx),
                               cnf(f->left(), positive, env, universals, ctx), ctx);
      return concat(std::move(lr), std::move(rl), ctx);
    }
    case fol::FormulaKind::ForAll:
    case fol::FormulaKind::Exists: {
      bool universal = (f->kind() == fol::FormulaKind::ForAll) == positive;
      const std::string& v = f->bound_var();
      PTermPtr replacement;
      if (universal) {
        replacement = pvar(ctx.fresh_var());
      } else {
        replacement = papp(ctx.fresh_sk(), universals);
      }
      auto saved = env.find(v) != env.end() ? std::optional<PTermPtr>(env[v]) : std::nullopt;
      env[v] = replacement;
      if (universal) universals.push_back(replacement);
      auto out = cnf(f->body(), positive, env, universals, ctx);
      if (universal) universals.pop_back();
      if (saved)
        env[v] = *saved;
      else
        env.erase(v);
      return out;
    }
  }
  throw std::logic_error("unreachable formula kind");
}

fol::FormulaPtr close_universally(const fol::FormulaPtr& f) {
  fol::FormulaPtr out = f;
  auto frees = fol::free_vars(f);
  for (auto it = frees.rbegin(); it != frees.rend(); ++it) out = fol::forall(*it, out);
  return out;
}

}  // namespace

std::vector<Clause> equality_axioms() {
  Literal refl;
  refl.positive = true;
  refl.pred = "eq";
  refl.lhs = pvar("X");
  refl.rhs = pvar("X");
  Clause c;
  c.literals = {refl};
  c.rule = "input";
  return {c};
}

std::vector<Clause> clausify(const std::vector<fol::FormulaPtr>& axioms,
                             const fol::FormulaPtr& goal, std::size_t max_clauses) {
  Ctx ctx;
  ctx.max_clauses = max_clauses;

  std::vector<Clause> out = equality_axioms();
  auto emit = [&out, &ctx](const fol::FormulaPtr& f, bool positive, bool is_goal) {
    std::map<std::string, PTermPtr> env;
    std::vector<PTermPtr> universals;
    for (auto& lits : cnf(close_universally(f), positive, env, universals, ctx)) {
      Clause c;
      c.literals = std::move(lits);
      c.rule = "input";
      c.goal = is_goal;
      out.push_back(std::move(c));
      if (out.size() > ctx.max_clauses)
        throw fol::ResourceLimitError("clause normal form exceeds the clause cap");
    }
  };

  for (const auto& a : axioms) emit(a, true, false);
  emit(goal, false, true);
  return out;
}

}  // namespace indshape::prover
