#ifndef INDSHAPE_TESTS_SUPPORT_HPP
#define INDSHAPE_TESTS_SUPPORT_HPP

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "indshape/fol/parse.hpp"
#include "indshape/fol/print.hpp"
#include "indshape/model/nat_eval.hpp"
#include "indshape/schemes/schemes.hpp"

namespace indshape::test {

inline std::string golden_path(const std::string& rel) {
  return std::string(INDSHAPE_GOLDEN_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline fol::FormulaPtr golden_formula(const std::string& rel) {
  return fol::parse_formula(read_file(golden_path(rel)));
}

using Rng = std::mt19937_64;

inline unsigned long rng_below(Rng& rng, unsigned long n) {
  return std::uniform_int_distribution<unsigned long>(0, n - 1)(rng);
}

// Random term over the given variables with constants <= max_const.
inline fol::TermPtr random_term(Rng& rng, const std::vector<std::string>& vars, unsigned depth,
                                unsigned long max_const = 3) {
  if (depth == 0 || rng_below(rng, 3) == 0) {
    unsigned long pick = rng_below(rng, vars.size() + max_const + 1);
    if (pick < vars.size()) return fol::Term::var(vars[pick]);
    return fol::nat_term(pick - vars.size());
  }
  auto l = random_term(rng, vars, depth - 1, max_const);
  auto r = random_term(rng, vars, depth - 1, max_const);
  return rng_below(rng, 2) ? fol::Term::mul(l, r) : fol::Term::add(l, r);
}

inline fol::FormulaPtr random_atom(Rng& rng, const std::vector<std::string>& vars, unsigned depth,
                                   bool allow_less = true) {
  auto l = random_term(rng, vars, depth);
  auto r = random_term(rng, vars, depth);
  if (allow_less && rng_below(rng, 2)) return fol::lt(l, r);
  return fol::eq(l, r);
}

// Random quantifier-free formula; connective depth <= depth, term depth <= 2.
inline fol::FormulaPtr random_qf(Rng& rng, const std::vector<std::string>& vars, unsigned depth,
                                 bool allow_less = true) {
  if (depth == 0 || rng_below(rng, 3) == 0) return random_atom(rng, vars, 2, allow_less);
  switch (rng_below(rng, 4)) {
    case 0:
      return fol::lnot(random_qf(rng, vars, depth - 1, allow_less));
    case 1:
      return fol::land(random_qf(rng, vars, depth - 1, allow_less),
                       random_qf(rng, vars, depth - 1, allow_less));
    case 2:
      return fol::lor(random_qf(rng, vars, depth - 1, allow_less),
                      random_qf(rng, vars, depth - 1, allow_less));
    default:
      return fol::implies(random_qf(rng, vars, depth - 1, allow_less),
                          random_qf(rng, vars, depth - 1, allow_less));
  }
}

// Calls fn with every assignment of {0..max} to the variables.
template <typename Fn>
void for_each_env(const std::vector<std::string>& vars, unsigned long max, Fn&& fn) {
  std::vector<unsigned long> point(vars.size(), 0);
  for (;;) {
    model::NatEnv env;
    for (size_t i = 0; i < vars.size(); ++i) env[vars[i]] = point[i];
    fn(env);
    size_t i = 0;
    while (i < point.size() && point[i] == max) point[i++] = 0;
    if (i == point.size()) return;
    ++point[i];
  }
}

// Closure of the notion's bases under its step maps, truncated at bound.
// Written directly from the Notion fields so the library's own reachability
// can be judged against it.
inline std::set<unsigned long> closure_oracle(const schemes::Notion& n, unsigned long bound) {
  using K = schemes::Notion::Kind;
  std::set<unsigned long> out;
  if (n.kind == K::LessThan) {
    for (unsigned long m = 0; m <= bound; ++m) out.insert(m);
    return out;
  }
  std::vector<unsigned long> work;
  auto push = [&](unsigned long m) {
    if (m <= bound && out.insert(m).second) work.push_back(m);
  };
  switch (n.kind) {
    case K::Successor:
    case K::Cut:
    case K::ACut:
    case K::AMCut:
      push(0);
      break;
    case K::StepK:
    case K::KInduction:
      for (unsigned long b = 0; b < n.k; ++b) push(b);
      break;
    case K::PolyInd:
      push(0);
      break;
    case K::Generalized:
      for (unsigned long b : n.bases) push(b);
      break;
    case K::LessThan:
      break;
  }
  while (!work.empty()) {
    unsigned long m = work.back();
    work.pop_back();
    switch (n.kind) {
      case K::Successor:
      case K::Cut:
      case K::ACut:
      case K::AMCut:
        push(m + 1);
        break;
      case K::StepK:
      case K::KInduction:
        push(m + n.k);
        break;
      case K::PolyInd:
        for (unsigned long i = 0; i < n.k; ++i) push(n.k * m + i);
        break;
      case K::Generalized:
        for (const auto& t : n.steps) {
          model::NatEnv env;
          for (const auto& v : fol::term_vars(t)) env[v] = m;
          model::Int stepped = model::nat_eval_term(t, env);
          if (stepped <= bound) push(stepped.convert_to<unsigned long>());
        }
        break;
      case K::LessThan:
        break;
    }
  }
  return out;
}

// Universal closure of (hypotheses -> goal), the sentence an obligation
// asserts.
inline fol::FormulaPtr obligation_sentence(const schemes::Obligation& ob) {
  fol::FormulaPtr f = ob.goal;
  for (auto it = ob.hypotheses.rbegin(); it != ob.hypotheses.rend(); ++it)
    f = fol::implies(*it, f);
  for (const auto& v : fol::free_vars(f)) f = fol::forall(v, f);
  return f;
}

inline bool obligations_hold_bounded(const fol::FormulaPtr& phi, const std::string& x,
                                     const schemes::Notion& n, unsigned long bound) {
  auto obls = schemes::inductiveness_obligations(phi, x, n);
  for (const auto& ob : obls.obligations)
    if (!model::nat_bounded_eval(obligation_sentence(ob), {}, bound)) return false;
  return true;
}

}  // namespace indshape::test

#endif
