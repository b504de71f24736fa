#include "indshape/prover/saturate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace indshape::prover {

namespace {

using Subst = std::map<std::string, PTermPtr>;

PTermPtr walk(PTermPtr t, const Subst& s) {
  while (t->is_var) {
    auto it = s.find(t->name);
    if (it == s.end()) return t;
    t = it->second;
  }
  return t;
}

PTermPtr apply_subst(const PTermPtr& t, const Subst& s) {
  PTermPtr w = walk(t, s);
  if (w->is_var || w->args.empty()) return w;
  std::vector<PTermPtr> args;
  args.reserve(w->args.size());
  bool changed = false;
  for (const auto& a : w->args) {
    args.push_back(apply_subst(a, s));
    changed = changed || args.back().get() != a.get();
  }
  return changed ? papp(w->name, std::move(args)) : w;
}

// Canonical form modulo associativity and commutativity of plus and times.
// A nest of one operator flattens into an argument list, the list is sorted,
// and the term is rebuilt right-nested. AC-equal terms then compare equal
// syntactically: the AC axioms themselves collapse to eq(t,t) tautologies
// at keep time, and the permutation orbit of a term, which no reduction
// order can break (plus(V0,V1) and plus(V1,V0) are KBO-incomparable), never
// materializes as distinct clauses.
bool ac_operator(const std::string& name) { return name == "plus" || name == "times"; }

void flatten_ac(const std::string& op, const PTermPtr& t, std::vector<PTermPtr>& out) {
  if (!t->is_var && t->name == op && t->args.size() == 2) {
    flatten_ac(op, t->args[0], out);
    flatten_ac(op, t->args[1], out);
    return;
  }
  out.push_back(t);
}

// Argument order: zero, one, other constants, compound terms, variables.
// Variables sort last so that a canonical pattern's variable tail lines up
// with the tail of a canonical ground term during syntactic unification.
int canonical_class(const PTermPtr& t) {
  if (t->is_var) return 4;
  if (t->args.empty()) return t->name == "zero" ? 0 : t->name == "one" ? 1 : 2;
  return 3;
}

bool canonical_before(const PTermPtr& a, const PTermPtr& b) {
  int ca = canonical_class(a), cb = canonical_class(b);
  if (ca != cb) return ca < cb;
  std::size_t wa = pterm_weight(a), wb = pterm_weight(b);
  if (wa != wb) return wa < wb;
  return pterm_text(a) < pterm_text(b);
}

PTermPtr canonical_term(const PTermPtr& t) {
  if (t->is_var) return t;
  std::vector<PTermPtr> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(canonical_term(a));
  if (!ac_operator(t->name) || args.size() != 2) return papp(t->name, std::move(args));
  std::vector<PTermPtr> flat;
  flatten_ac(t->name, args[0], flat);
  flatten_ac(t->name, args[1], flat);
  std::stable_sort(flat.begin(), flat.end(), canonical_before);
  PTermPtr acc = flat.back();
  for (std::size_t i = flat.size() - 1; i-- > 0;) acc = papp(t->name, {flat[i], acc});
  return acc;
}

// eq sides carry no orientation, so they get the fixed order too; the
// symmetric variants of an equation then dedupe instead of coexisting.
Literal canonical_literal(const Literal& l) {
  Literal out = l;
  out.lhs = canonical_term(l.lhs);
  out.rhs = canonical_term(l.rhs);
  if (out.pred == "eq" && canonical_before(out.lhs, out.rhs)) std::swap(out.lhs, out.rhs);
  return out;
}

bool occurs(const std::string& v, const PTermPtr& t, const Subst& s) {
  PTermPtr w = walk(t, s);
  if (w->is_var) return w->name == v;
  for (const auto& a : w->args)
    if (occurs(v, a, s)) return true;
  return false;
}

bool unify(const PTermPtr& a, const PTermPtr& b, Subst& s);

PTermPtr rebuild_ac(const std::string& op, std::vector<PTermPtr> flat) {
  std::stable_sort(flat.begin(), flat.end(), canonical_before);
  PTermPtr acc = flat.back();
  for (std::size_t i = flat.size() - 1; i-- > 0;) acc = papp(op, {flat[i], acc});
  return acc;
}

// Fallback for two chains of the same AC operator that fail positionally.
// Cancels syntactically equal arguments multiset-style and lets a leftover
// variable soak up the rest. Finds unifiers canonical sorting hides, e.g.
// plus(sk3,V0) against plus(sk1,sk3) with V0 := sk1. Not complete AC
// unification, but every binding it makes yields terms equal modulo AC,
// which is all the calculus needs.
bool unify_ac(const PTermPtr& x, const PTermPtr& y, Subst& s) {
  std::vector<PTermPtr> xs, ys;
  flatten_ac(x->name, apply_subst(x, s), xs);
  flatten_ac(y->name, apply_subst(y, s), ys);
  for (auto it = xs.begin(); it != xs.end();) {
    bool cancelled = false;
    for (auto jt = ys.begin(); jt != ys.end(); ++jt)
      if (pterm_equal(*it, *jt)) {
        ys.erase(jt);
        it = xs.erase(it);
        cancelled = true;
        break;
      }
    if (!cancelled) ++it;
  }
  if (xs.empty() || ys.empty()) return xs.empty() && ys.empty();
  if (xs.size() == 1 && ys.size() == 1) return unify(xs[0], ys[0], s);
  if (xs.size() == 1 && xs[0]->is_var) {
    if (std::any_of(ys.begin(), ys.end(),
                    [&](const PTermPtr& t) { return occurs(xs[0]->name, t, s); }))
      return false;
    s[xs[0]->name] = rebuild_ac(y->name, std::move(ys));
    return true;
  }
  if (ys.size() == 1 && ys[0]->is_var) {
    if (std::any_of(xs.begin(), xs.end(),
                    [&](const PTermPtr& t) { return occurs(ys[0]->name, t, s); }))
      return false;
    s[ys[0]->name] = rebuild_ac(x->name, std::move(xs));
    return true;
  }
  if (xs.size() != ys.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!unify(xs[i], ys[i], s)) return false;
  return true;
}

bool unify(const PTermPtr& a, const PTermPtr& b, Subst& s) {
  PTermPtr x = walk(a, s), y = walk(b, s);
  if (x->is_var && y->is_var && x->name == y->name) return true;
  if (x->is_var) {
    if (occurs(x->name, y, s)) return false;
    s[x->name] = y;
    return true;
  }
  if (y->is_var) {
    if (occurs(y->name, x, s)) return false;
    s[y->name] = x;
    return true;
  }
  if (x->name != y->name || x->args.size() != y->args.size()) return false;
  if (ac_operator(x->name) && x->args.size() == 2) {
    Subst positional = s;
    if (unify(x->args[0], y->args[0], positional) && unify(x->args[1], y->args[1], positional)) {
      s = std::move(positional);
      return true;
    }
    return unify_ac(x, y, s);
  }
  for (std::size_t i = 0; i < x->args.size(); ++i)
    if (!unify(x->args[i], y->args[i], s)) return false;
  return true;
}

bool unify_atoms(const Literal& a, const Literal& b, Subst& s) {
  if (a.pred != b.pred) return false;
  Subst straight = s;
  if (unify(a.lhs, b.lhs, straight) && unify(a.rhs, b.rhs, straight)) {
    s = std::move(straight);
    return true;
  }
  // eq is symmetric; the sides of an eq atom carry no orientation, so the
  // crossed alignment is just as good.
  if (a.pred != "eq") return false;
  Subst crossed = s;
  if (unify(a.lhs, b.rhs, crossed) && unify(a.rhs, b.lhs, crossed)) {
    s = std::move(crossed);
    return true;
  }
  return false;
}

Literal subst_literal(const Literal& l, const Subst& s) {
  Literal out = l;
  out.lhs = apply_subst(l.lhs, s);
  out.rhs = apply_subst(l.rhs, s);
  return out;
}

bool match_term(const PTermPtr& pat, const PTermPtr& t, Subst& s);
PTermPtr rename_term(const PTermPtr& t, const Subst& s);

// True when every variable of the pattern subterm is already bound, so the
// subterm stands for one definite target term.
bool pat_determined(const PTermPtr& p, const Subst& s) {
  if (p->is_var) return s.count(p->name) > 0;
  for (const auto& a : p->args)
    if (!pat_determined(a, s)) return false;
  return true;
}

// One-way analogue of unify_ac. Determined pattern arguments must cancel an
// equal target argument; afterwards a lone unbound variable soaks up the
// remaining targets, or the leftovers pair off positionally with the last
// variable taking the surplus. Instantiated fragments are only ever
// compared, never re-matched, so target variable names cannot be captured.
bool match_ac(const PTermPtr& pat, const PTermPtr& t, Subst& s) {
  std::vector<PTermPtr> ps, ts;
  flatten_ac(pat->name, pat, ps);
  flatten_ac(t->name, t, ts);
  std::vector<PTermPtr> open;
  for (const auto& p : ps) {
    if (!pat_determined(p, s)) {
      open.push_back(p);
      continue;
    }
    std::vector<PTermPtr> pieces;  // a binding can itself be a chain
    flatten_ac(pat->name, rename_term(p, s), pieces);
    for (const auto& piece : pieces) {
      bool cancelled = false;
      for (auto jt = ts.begin(); jt != ts.end(); ++jt)
        if (pterm_equal(piece, *jt)) {
          ts.erase(jt);
          cancelled = true;
          break;
        }
      if (!cancelled) return false;
    }
  }
  if (open.empty()) return ts.empty();
  if (ts.size() < open.size()) return false;
  for (std::size_t i = 0; i + 1 < open.size(); ++i)
    if (!match_term(open[i], ts[i], s)) return false;
  const PTermPtr& last = open.back();
  std::vector<PTermPtr> rest(ts.begin() + static_cast<std::ptrdiff_t>(open.size()) - 1, ts.end());
  if (rest.size() == 1) return match_term(last, rest[0], s);
  if (last->is_var && !s.count(last->name)) {
    s[last->name] = rebuild_ac(t->name, std::move(rest));
    return true;
  }
  return match_term(last, rebuild_ac(t->name, std::move(rest)), s);
}

// One-way matching: binds only variables of the pattern; target variables
// are opaque constants.
bool match_term(const PTermPtr& pat, const PTermPtr& t, Subst& s) {
  if (pat->is_var) {
    auto it = s.find(pat->name);
    if (it != s.end()) return pterm_equal(it->second, t);
    s[pat->name] = t;
    return true;
  }
  if (t->is_var || pat->name != t->name || pat->args.size() != t->args.size()) return false;
  if (ac_operator(pat->name) && pat->args.size() == 2) {
    Subst positional = s;
    if (match_term(pat->args[0], t->args[0], positional) &&
        match_term(pat->args[1], t->args[1], positional)) {
      s = std::move(positional);
      return true;
    }
    return match_ac(pat, t, s);
  }
  for (std::size_t i = 0; i < pat->args.size(); ++i)
    if (!match_term(pat->args[i], t->args[i], s)) return false;
  return true;
}

// Matches one literal onto another, trying both eq alignments.
bool match_literal(const Literal& pat, const Literal& t, const Subst& s, Subst& out) {
  Subst straight = s;
  if (match_term(pat.lhs, t.lhs, straight) && match_term(pat.rhs, t.rhs, straight)) {
    out = std::move(straight);
    return true;
  }
  if (pat.pred != "eq") return false;
  Subst crossed = s;
  if (match_term(pat.lhs, t.rhs, crossed) && match_term(pat.rhs, t.lhs, crossed)) {
    out = std::move(crossed);
    return true;
  }
  return false;
}

bool subsumes_rec(const std::vector<Literal>& sub, std::size_t i, const std::vector<Literal>& sup,
                  const Subst& s) {
  if (i == sub.size()) return true;
  for (const auto& cand : sup) {
    if (cand.positive != sub[i].positive || cand.pred != sub[i].pred) continue;
    Subst next;
    if (match_literal(sub[i], cand, s, next) && subsumes_rec(sub, i + 1, sup, next)) return true;
  }
  return false;
}

bool subsumes(const Clause& sub, const Clause& sup) {
  if (sub.literals.size() > sup.literals.size()) return false;
  Subst s;
  return subsumes_rec(sub.literals, 0, sup.literals, s);
}

void collect_vars(const PTermPtr& t, std::vector<std::string>& order,
                  std::set<std::string>& seen) {
  if (t->is_var) {
    if (seen.insert(t->name).second) order.push_back(t->name);
    return;
  }
  for (const auto& a : t->args) collect_vars(a, order, seen);
}

// Simultaneous one-shot renaming. Unlike apply_subst this never chases
// bindings, so permutations like {V0 -> V1, V1 -> V0} are safe.
PTermPtr rename_term(const PTermPtr& t, const Subst& s) {
  if (t->is_var) {
    auto it = s.find(t->name);
    return it == s.end() ? t : it->second;
  }
  if (t->args.empty()) return t;
  std::vector<PTermPtr> args;
  args.reserve(t->args.size());
  bool changed = false;
  for (const auto& a : t->args) {
    args.push_back(rename_term(a, s));
    changed = changed || args.back().get() != a.get();
  }
  return changed ? papp(t->name, std::move(args)) : t;
}

Literal rename_literal(const Literal& l, const Subst& s) {
  Literal out = l;
  out.lhs = rename_term(l.lhs, s);
  out.rhs = rename_term(l.rhs, s);
  return out;
}

enum class Order { Greater, Less, Equal, None };

void count_vars(const PTermPtr& t, std::map<std::string, int>& occ) {
  if (t->is_var) {
    ++occ[t->name];
    return;
  }
  for (const auto& a : t->args) count_vars(a, occ);
}

bool covers_vars(const std::map<std::string, int>& big, const std::map<std::string, int>& small) {
  for (const auto& [v, n] : small) {
    auto it = big.find(v);
    if (it == big.end() || it->second < n) return false;
  }
  return true;
}

// Total precedence on function symbols; ties cannot happen between
// distinct names.
int symbol_rank(const std::string& f) {
  if (f == "times") return 3;
  if (f == "plus") return 2;
  return 1;
}

bool prec_greater(const std::string& f, const std::string& g) {
  int rf = symbol_rank(f), rg = symbol_rank(g);
  if (rf != rg) return rf > rg;
  return f > g;
}

// Knuth-Bendix ordering with all symbol and variable weights 1. Greater
// instances stay greater under substitution, so rewriting Greater -> smaller
// terminates.
Order kbo(const PTermPtr& s, const PTermPtr& t) {
  if (pterm_equal(s, t)) return Order::Equal;
  std::map<std::string, int> vs, vt;
  count_vars(s, vs);
  count_vars(t, vt);
  std::size_t ws = pterm_weight(s), wt = pterm_weight(t);
  if (ws > wt) return covers_vars(vs, vt) ? Order::Greater : Order::None;
  if (wt > ws) return covers_vars(vt, vs) ? Order::Less : Order::None;
  if (s->is_var || t->is_var) return Order::None;  // distinct vars or var vs constant
  if (s->name != t->name) {
    if (prec_greater(s->name, t->name)) return covers_vars(vs, vt) ? Order::Greater : Order::None;
    return covers_vars(vt, vs) ? Order::Less : Order::None;
  }
  for (std::size_t i = 0; i < s->args.size(); ++i) {
    Order o = kbo(s->args[i], t->args[i]);
    if (o == Order::Equal) continue;
    if (o == Order::Greater) return covers_vars(vs, vt) ? Order::Greater : Order::None;
    if (o == Order::Less) return covers_vars(vt, vs) ? Order::Less : Order::None;
    return Order::None;
  }
  return Order::Equal;  // unreachable: pterm_equal caught it
}


// Non-variable positions of t as child-index paths, outermost first.
void collect_positions(const PTermPtr& t, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (t->is_var) return;
  out.push_back(cur);
  for (std::size_t i = 0; i < t->args.size(); ++i) {
    cur.push_back(i);
    collect_positions(t->args[i], cur, out);
    cur.pop_back();
  }
}

PTermPtr subterm_at(const PTermPtr& t, const std::vector<std::size_t>& path, std::size_t depth) {
  return depth == path.size() ? t : subterm_at(t->args[path[depth]], path, depth + 1);
}

PTermPtr replace_at(const PTermPtr& t, const std::vector<std::size_t>& path, std::size_t depth,
                    const PTermPtr& repl) {
  if (depth == path.size()) return repl;
  std::vector<PTermPtr> args = t->args;
  args[path[depth]] = replace_at(args[path[depth]], path, depth + 1, repl);
  return papp(t->name, std::move(args));
}

// Renames variables to V0, V1, ... in order of first appearance.
void normalize_clause(Clause& c) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto& l : c.literals) {
    collect_vars(l.lhs, order, seen);
    collect_vars(l.rhs, order, seen);
  }
  Subst s;
  for (std::size_t i = 0; i < order.size(); ++i) s[order[i]] = pvar("V" + std::to_string(i));
  for (auto& l : c.literals) l = rename_literal(l, s);
}

Clause rename_apart(const Clause& c, std::size_t tick) {
  Clause out = c;
  Subst s;
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto& l : c.literals) {
    collect_vars(l.lhs, order, seen);
    collect_vars(l.rhs, order, seen);
  }
  for (const auto& v : order) s[v] = pvar("G" + std::to_string(tick) + "_" + v);
  for (auto& l : out.literals) l = rename_literal(l, s);
  return out;
}

bool is_positive_clause(const Clause& c) {
  for (const auto& l : c.literals)
    if (!l.positive) return false;
  return true;
}

const Literal* selected_negative(const Clause& c) {
  for (const auto& l : c.literals)
    if (!l.positive) return &l;
  return nullptr;
}

PTermPtr atom_term(const Literal& l) { return papp(l.pred, {l.lhs, l.rhs}); }

bool atom_greater(const Literal& a, const Literal& b) {
  Order o = kbo(atom_term(a), atom_term(b));
  if (o == Order::Greater) return true;
  if (o == Order::Equal) return !a.positive && b.positive;
  return false;
}

// A literal may act in an inference if it is selected (first negative), or,
// in a clause with no negatives, not beaten by another literal in the KBO
// atom order. Non-maximal positives wait until the literals guarding them
// are resolved away; this is what keeps case-split equations from rewriting
// everything in sight.
bool eligible(const Clause& c, std::size_t idx) {
  const Literal* sel = selected_negative(c);
  if (sel) return &c.literals[idx] == sel;
  for (std::size_t j = 0; j < c.literals.size(); ++j)
    if (j != idx && atom_greater(c.literals[j], c.literals[idx])) return false;
  return true;
}

bool is_tautology(const Clause& c) {
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    const Literal& a = c.literals[i];
    if (a.positive && a.pred == "eq" && pterm_equal(a.lhs, a.rhs)) return true;
    for (std::size_t j = i + 1; j < c.literals.size(); ++j) {
      const Literal& b = c.literals[j];
      if (a.positive == b.positive || a.pred != b.pred) continue;
      if (pterm_equal(a.lhs, b.lhs) && pterm_equal(a.rhs, b.rhs)) return true;
      if (a.pred == "eq" && pterm_equal(a.lhs, b.rhs) && pterm_equal(a.rhs, b.lhs)) return true;
    }
  }
  return false;
}

struct DemodRule {
  PTermPtr lhs, rhs;
  std::size_t id;
  // Oriented rules always rewrite lhs -> rhs. Unoriented ones hold an
  // unorientable equation (commutativity and friends); an instance applies
  // only where it strictly decreases the term, which canonicalizes the
  // rearrangement orbit of a term instead of enumerating it.
  bool oriented = true;
};

struct Engine {
  BuiltinLimits limits;
  std::chrono::steady_clock::time_point deadline;

  std::vector<Clause> store;                       // all kept clauses, id = index
  std::set<std::pair<std::size_t, std::size_t>> passive;  // (weight, id)
  std::set<std::size_t> passive_by_age;            // same ids, ordered by age
  std::vector<std::size_t> active;
  std::vector<std::size_t> units;                  // ids of stored unit clauses
  std::vector<DemodRule> rules;
  std::size_t empty_id = SIZE_MAX;
  std::size_t tick = 0;
  std::size_t iteration = 1;

  bool out_of_clauses() const { return store.size() >= limits.max_clauses; }
  bool out_of_time() const { return std::chrono::steady_clock::now() > deadline; }

  // Innermost-first rewriting with the orientable unit equations. skip_id
  // exempts one rule: re-simplifying a stored unit equation with its own
  // rule would collapse it to a tautology and lose it.
  PTermPtr rewrite(const PTermPtr& t, std::set<std::size_t>& used,
                   std::size_t skip_id = SIZE_MAX) {
    PTermPtr cur = t;
    if (!cur->is_var && !cur->args.empty()) {
      std::vector<PTermPtr> args;
      args.reserve(cur->args.size());
      bool changed = false;
      for (const auto& a : cur->args) {
        args.push_back(rewrite(a, used, skip_id));
        changed = changed || args.back().get() != a.get();
      }
      if (changed) cur = papp(cur->name, std::move(args));
    }
    for (std::size_t round = 0; round < 100; ++round) {
      bool hit = false;
      for (const auto& r : rules) {
        if (r.id == skip_id) continue;
        Subst s;
        if (match_term(r.lhs, cur, s)) {
          PTermPtr cand = apply_subst(r.rhs, s);
          if (r.oriented || kbo(cur, cand) == Order::Greater) {
            cur = rewrite(cand, used, skip_id);
            used.insert(r.id);
            hit = true;
            break;
          }
        }
        if (!r.oriented) {
          Subst s2;
          if (match_term(r.rhs, cur, s2)) {
            PTermPtr cand = apply_subst(r.lhs, s2);
            if (kbo(cur, cand) == Order::Greater) {
              cur = rewrite(cand, used, skip_id);
              used.insert(r.id);
              hit = true;
              break;
            }
          }
        }
      }
      if (!hit) break;
    }
    return cur;
  }

  // Unit cutting (subsumption resolution with a unit): a stored unit whose
  // literal matches the negation of one of ours deletes that literal. This
  // is what discharges a pending case split the moment its refuting unit
  // exists, instead of carrying the dead literal through every descendant.
  void cut_literals(Clause& c) {
    bool cut = false;
    std::vector<Literal> kept;
    for (const auto& l : c.literals) {
      bool dead = false;
      for (std::size_t uid : units) {
        const Literal& m = store[uid].literals.front();
        if (m.positive == l.positive || m.pred != l.pred) continue;
        Subst s;
        if (match_literal(m, l, {}, s)) {
          c.parents.push_back(uid);
          dead = true;
          break;
        }
      }
      if (dead) cut = true;
      else kept.push_back(l);
    }
    if (cut) {
      c.literals = std::move(kept);
      c.rule += c.rule.empty() ? "cut" : "+cut";
    }
  }

  // Input clauses and clauses descended from the goal jump the queue;
  // derived pure-theory consequences (the rearrangement orbit of + and *
  // is the worst offender) pay a weight penalty so they cannot drown the
  // refutation.
  std::size_t queue_weight(const Clause& c) const {
    bool cheap = c.goal || c.parents.empty();
    return clause_weight(c) * (cheap ? 1 : 2);
  }

  // Normalizes, simplifies, and stores a clause unless it is redundant.
  // Returns true when the empty clause was derived.
  bool keep(Clause c) {
    std::set<std::size_t> demod_used;
    for (auto& l : c.literals) {
      l = canonical_literal(l);
      l.lhs = rewrite(l.lhs, demod_used);
      l.rhs = rewrite(l.rhs, demod_used);
      if (!demod_used.empty()) l = canonical_literal(l);
    }
    if (!demod_used.empty()) {
      c.rule += "+demod";
      for (std::size_t id : demod_used) c.parents.push_back(id);
    }

    std::vector<Literal> lits;
    for (auto& l : c.literals) {
      if (l.pred == "eq" && pterm_equal(l.lhs, l.rhs)) {
        if (l.positive) return false;  // tautology
        continue;                      // false literal
      }
      bool dup = false;
      for (const auto& have : lits)
        if (literal_equal(have, l)) {
          dup = true;
          break;
        }
      if (!dup) lits.push_back(std::move(l));
    }
    c.literals = std::move(lits);
    cut_literals(c);
    for (std::size_t p : c.parents)
      if (p < store.size() && store[p].goal) c.goal = true;
    if (is_tautology(c)) return false;
    normalize_clause(c);
    // Renaming can reorder variables within a sorted argument list.
    for (auto& l : c.literals) l = canonical_literal(l);

    for (const auto& kept : store)
      if (subsumes(kept, c)) return false;

    c.id = store.size();
    if (c.literals.empty()) {
      empty_id = c.id;
      store.push_back(std::move(c));
      return true;
    }
    passive.insert({queue_weight(c), c.id});
    passive_by_age.insert(c.id);
    maybe_add_rule(c);
    if (c.literals.size() == 1) units.push_back(c.id);
    store.push_back(std::move(c));
    return false;
  }

  // Rule variables get the reserved R namespace so they can never collide
  // with clause variables during matching; a collision would make the
  // triangular substitution cyclic (V0 -> V0) and rewriting would not
  // terminate.
  void add_rule(const PTermPtr& big, const PTermPtr& small, std::size_t id, bool oriented) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    collect_vars(big, order, seen);
    collect_vars(small, order, seen);
    Subst s;
    for (std::size_t i = 0; i < order.size(); ++i) s[order[i]] = pvar("R" + std::to_string(i));
    rules.push_back({rename_term(big, s), rename_term(small, s), id, oriented});
  }

  void maybe_add_rule(const Clause& c) {
    if (c.literals.size() != 1) return;
    const Literal& l = c.literals.front();
    if (!l.positive || l.pred != "eq") return;
    switch (kbo(l.lhs, l.rhs)) {
      case Order::Greater: add_rule(l.lhs, l.rhs, c.id, true); break;
      case Order::Less: add_rule(l.rhs, l.lhs, c.id, true); break;
      case Order::None: add_rule(l.lhs, l.rhs, c.id, false); break;
      case Order::Equal: break;
    }
  }

  bool resolve_pair(const Clause& pos, const Literal& pos_lit, std::size_t pos_idx,
                    const Clause& neg, const Literal& neg_lit) {
    if (!eligible(pos, pos_idx)) return false;
    Subst s;
    if (!unify_atoms(pos_lit, neg_lit, s)) return false;
    Clause r;
    r.rule = "resolve";
    r.parents = {pos.id, neg.id};
    for (std::size_t i = 0; i < pos.literals.size(); ++i)
      if (i != pos_idx) r.literals.push_back(subst_literal(pos.literals[i], s));
    for (const auto& l : neg.literals)
      if (&l != &neg_lit) r.literals.push_back(subst_literal(l, s));
    return keep(std::move(r));
  }

  bool factor(const Clause& c) {
    for (std::size_t i = 0; i < c.literals.size(); ++i) {
      for (std::size_t j = i + 1; j < c.literals.size(); ++j) {
        Subst s;
        if (!unify_atoms(c.literals[i], c.literals[j], s)) continue;
        Clause f;
        f.rule = "factor";
        f.parents = {c.id};
        for (std::size_t k = 0; k < c.literals.size(); ++k)
          if (k != j) f.literals.push_back(subst_literal(c.literals[k], s));
        if (keep(std::move(f))) return true;
      }
    }
    return false;
  }

  // Paramodulation from the positive equation from.literals[from_idx] into
  // every non-variable subterm of into, both orientations. Variables never
  // rewrite: a variable left side would unify with every subterm.
  bool paramod(const Clause& from, std::size_t from_idx, const Clause& into) {
    if (!eligible(from, from_idx)) return false;
    const Literal& eql = from.literals[from_idx];
    const PTermPtr* pair[2][2] = {{&eql.lhs, &eql.rhs}, {&eql.rhs, &eql.lhs}};
    for (const auto& lr : pair) {
      const PTermPtr& l = *lr[0];
      const PTermPtr& r = *lr[1];
      if (l->is_var) continue;
      for (std::size_t li = 0; li < into.literals.size(); ++li) {
        if (!eligible(into, li)) continue;
        for (int side = 0; side < 2; ++side) {
          const PTermPtr& target = side ? into.literals[li].rhs : into.literals[li].lhs;
          std::vector<std::vector<std::size_t>> positions;
          std::vector<std::size_t> cur;
          collect_positions(target, cur, positions);
          for (const auto& path : positions) {
            Subst s;
            if (!unify(l, subterm_at(target, path, 0), s)) continue;
            // Ordered: never rewrite toward the KBO-larger side.
            Order o = kbo(apply_subst(l, s), apply_subst(r, s));
            if (o == Order::Less || o == Order::Equal) continue;
            Clause p;
            p.rule = "paramod";
            p.parents = {from.id, into.id};
            for (std::size_t k = 0; k < from.literals.size(); ++k)
              if (k != from_idx) p.literals.push_back(subst_literal(from.literals[k], s));
            for (std::size_t k = 0; k < into.literals.size(); ++k) {
              Literal lit = into.literals[k];
              if (k == li) {
                PTermPtr patched = replace_at(target, path, 0, r);
                (side ? lit.rhs : lit.lhs) = patched;
              }
              p.literals.push_back(subst_literal(lit, s));
            }
            if (keep(std::move(p))) return true;
          }
        }
      }
    }
    return false;
  }

  // All paramodulation inferences between the given clause and a stored
  // partner: equations of a fully positive clause rewrite the other clause.
  bool paramod_between(const Clause& given, const Clause& other) {
    if (is_positive_clause(given)) {
      for (std::size_t i = 0; i < given.literals.size(); ++i)
        if (given.literals[i].pred == "eq" && paramod(given, i, other)) return true;
    }
    if (is_positive_clause(other)) {
      for (std::size_t i = 0; i < other.literals.size(); ++i)
        if (other.literals[i].pred == "eq" && paramod(other, i, given)) return true;
    }
    return false;
  }

  Verdict stats(const char* reason) {
    if (std::getenv("INDSHAPE_SAT_STATS")) {
      std::fprintf(stderr, "saturate %s: store=%zu active=%zu passive=%zu rules=%zu\n", reason,
                   store.size(), active.size(), passive.size(), rules.size());
      for (std::size_t i = 0; i < active.size() && i < 120; ++i)
        std::fprintf(stderr, "  a%zu %s\n", active[i], clause_text(store[active[i]]).c_str());
    }
    return Verdict::unknown(reason);
  }

  Verdict run(const std::vector<Clause>& input) {
    for (const auto& c : input) {
      Clause copy = c;
      copy.rule = "input";
      copy.parents.clear();
      if (keep(std::move(copy))) return proof();
      if (out_of_clauses()) return Verdict::unknown("clause-limit");
    }

    while (!passive.empty()) {
      if (out_of_time()) return stats("timeout");
      if (out_of_clauses()) return stats("clause-limit");

      std::size_t given_id;
      bool by_age = limits.age_weight_ratio != 0 && iteration % limits.age_weight_ratio == 0;
      ++iteration;
      if (by_age) {
        given_id = *passive_by_age.begin();
        passive.erase({queue_weight(store[given_id]), given_id});
      } else {
        given_id = passive.begin()->second;
        passive.erase(passive.begin());
      }
      passive_by_age.erase(given_id);

      // Rules and units found after this clause was kept may simplify it
      // now. If so, requeue the smaller clause and drop the stale original
      // unprocessed.
      Clause popped = store[given_id];
      std::set<std::size_t> lazy;
      for (auto& l : popped.literals) {
        l.lhs = rewrite(l.lhs, lazy, given_id);
        l.rhs = rewrite(l.rhs, lazy, given_id);
      }
      popped.rule.clear();
      popped.parents.clear();
      popped.parents.push_back(given_id);
      for (std::size_t rid : lazy) popped.parents.push_back(rid);
      if (!lazy.empty()) popped.rule = "demod";
      cut_literals(popped);
      if (!popped.rule.empty()) {
        if (keep(std::move(popped))) return proof();
        continue;
      }
      // A more general clause stored since then makes this one redundant;
      // anything stored earlier was already checked when this one was kept.
      bool redundant = false;
      for (std::size_t later = given_id + 1; later < store.size(); ++later)
        if (subsumes(store[later], popped)) {
          redundant = true;
          break;
        }
      if (redundant) continue;

      active.push_back(given_id);

      Clause given = rename_apart(store[given_id], tick++);
      given.id = given_id;

      // store may grow (and reallocate) while we resolve, so partners are
      // taken by value.
      if (is_positive_clause(given)) {
        if (factor(given)) return proof();
        for (std::size_t aid : active) {
          Clause other = store[aid];
          const Literal* sel = selected_negative(other);
          if (sel)
            for (std::size_t i = 0; i < given.literals.size(); ++i)
              if (resolve_pair(given, given.literals[i], i, other, *sel)) return proof();
          if (paramod_between(given, other)) return proof();
          if (out_of_clauses() || out_of_time()) break;
        }
      } else {
        const Literal* sel = selected_negative(given);
        for (std::size_t aid : active) {
          Clause other = store[aid];
          if (!is_positive_clause(other)) continue;
          for (std::size_t i = 0; i < other.literals.size(); ++i)
            if (resolve_pair(other, other.literals[i], i, given, *sel)) return proof();
          if (paramod_between(given, other)) return proof();
          if (out_of_clauses() || out_of_time()) break;
        }
      }
    }
    return Verdict::refuted(true, "saturated");
  }

  Verdict proof() {
    std::set<std::size_t> needed;
    std::vector<std::size_t> todo = {empty_id};
    while (!todo.empty()) {
      std::size_t id = todo.back();
      todo.pop_back();
      if (!needed.insert(id).second) continue;
      for (std::size_t p : store[id].parents) todo.push_back(p);
    }
    std::vector<std::string> lines;
    for (std::size_t id : needed) {
      const Clause& c = store[id];
      std::string line = std::to_string(c.id) + ". " + clause_text(c) + "  [" + c.rule;
      for (std::size_t i = 0; i < c.parents.size(); ++i)
        line += (i ? "," : " ") + std::to_string(c.parents[i]);
      line += "]";
      lines.push_back(std::move(line));
    }
    return Verdict::proved(std::move(lines));
  }
};

}  // namespace

Verdict saturate(const std::vector<Clause>& input, const BuiltinLimits& limits) {
  Engine e;
  e.limits = limits;
  e.deadline = std::chrono::steady_clock::now() +
               std::chrono::microseconds(static_cast<long>(limits.max_seconds * 1e6));
  return e.run(input);
}

}  // namespace indshape::prover
