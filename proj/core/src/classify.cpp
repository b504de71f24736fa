#include "indshape/fol/classify.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

namespace indshape::fol {

unsigned long FormulaClass::rank() const {
  switch (tag) {
    case Tag::Atomic: return 0;
    case Tag::QuantifierFree: return 1;
    case Tag::Bounded: return 2;
    case Tag::SigmaK: return 2ul + k;
    case Tag::Unrestricted: return std::numeric_limits<unsigned long>::max();
  }
  return 0;
}

std::string FormulaClass::to_string() const {
  switch (tag) {
    case Tag::Atomic: return "atomic";
    case Tag::QuantifierFree: return "qf";
    case Tag::Bounded: return "bounded";
    case Tag::SigmaK: return "sigma:" + std::to_string(k);
    case Tag::Unrestricted: return "any";
  }
  return "any";
}

std::optional<FormulaClass> FormulaClass::parse(const std::string& s) {
  if (s == "atomic") return atomic();
  if (s == "qf") return quantifier_free();
  if (s == "bounded") return bounded();
  if (s == "any") return unrestricted();
  if (s.rfind("sigma:", 0) == 0) {
    const std::string num = s.substr(6);
    if (num.empty()) return std::nullopt;
    unsigned k = 0;
    for (char c : num) {
      if (c < '0' || c > '9') return std::nullopt;
      k = k * 10 + static_cast<unsigned>(c - '0');
    }
    if (k == 0) return std::nullopt;
    return sigma(k);
  }
  return std::nullopt;
}

bool operator==(const FormulaClass& a, const FormulaClass& b) {
  return a.tag == b.tag && (a.tag != FormulaClass::Tag::SigmaK || a.k == b.k);
}

bool class_within(const FormulaClass& a, const FormulaClass& b) {
  return a.rank() <= b.rank();
}

namespace {

bool is_var_named(const TermPtr& t, const std::string& v) {
  return t->kind() == TermKind::Var && t->var_name() == v;
}

bool bounded_rec(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Lt:
    case FormulaKind::Pred: return true;
    case FormulaKind::Not: return bounded_rec(f->left());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return bounded_rec(f->left()) && bounded_rec(f->right());
    case FormulaKind::ForAll: {
      const FormulaPtr& b = f->body();
      if (b->kind() != FormulaKind::Implies) return false;
      const FormulaPtr& guard = b->left();
      if (guard->kind() != FormulaKind::Lt) return false;
      if (!is_var_named(guard->lhs(), f->bound_var())) return false;
      if (term_vars(guard->rhs()).count(f->bound_var())) return false;
      return bounded_rec(b->right());
    }
    case FormulaKind::Exists: {
      const FormulaPtr& b = f->body();
      if (b->kind() != FormulaKind::And) return false;
      const FormulaPtr& guard = b->left();
      if (guard->kind() != FormulaKind::Lt) return false;
      if (!is_var_named(guard->lhs(), f->bound_var())) return false;
      if (term_vars(guard->rhs()).count(f->bound_var())) return false;
      return bounded_rec(b->right());
    }
  }
  return false;
}

// Alternating block strings over 'A'/'E'. merge() interleaves two strings,
// preserving order within each, so that the merged run count is minimal;
// blocks are atomic since splitting one can only add alternations.
std::string prepend_block(char c, const std::string& s) {
  if (!s.empty() && s[0] == c) return s;
  return std::string(1, c) + s;
}

struct MergeDP {
  const std::string& s;
  const std::string& t;
  // memo[i][j][last]: last 0 none, 1 'A', 2 'E'
  std::vector<std::vector<std::array<int, 3>>> memo;

  MergeDP(const std::string& s_, const std::string& t_) : s(s_), t(t_) {
    memo.assign(s.size() + 1,
                std::vector<std::array<int, 3>>(t.size() + 1, {-1, -1, -1}));
  }

  static int idx(char last) { return last == 0 ? 0 : last == 'A' ? 1 : 2; }

  int cost(size_t i, size_t j, char last) {
    int& m = memo[i][j][idx(last)];
    if (m >= 0) return m;
    if (i == s.size() && j == t.size()) return m = 0;
    int best = std::numeric_limits<int>::max();
    if (i < s.size()) {
      int c = (s[i] == last ? 0 : 1) + cost(i + 1, j, s[i]);
      best = std::min(best, c);
    }
    if (j < t.size()) {
      int c = (t[j] == last ? 0 : 1) + cost(i, j + 1, t[j]);
      best = std::min(best, c);
    }
    return m = best;
  }
};

// Only the run count of the merge matters, but downstream prepends need an
// actual string; rebuild one minimal interleaving greedily from the DP.
std::string merge_blocks(const std::string& s, const std::string& t) {
  if (s.empty()) return t;
  if (t.empty()) return s;
  MergeDP dp(s, t);
  std::string out;
  size_t i = 0, j = 0;
  char last = 0;
  while (i < s.size() || j < t.size()) {
    int take_s = std::numeric_limits<int>::max();
    int take_t = std::numeric_limits<int>::max();
    if (i < s.size()) take_s = (s[i] == last ? 0 : 1) + dp.cost(i + 1, j, s[i]);
    if (j < t.size()) take_t = (t[j] == last ? 0 : 1) + dp.cost(i, j + 1, t[j]);
    if (take_s <= take_t) {
      if (s[i] != last) out += s[i];
      last = s[i];
      ++i;
    } else {
      if (t[j] != last) out += t[j];
      last = t[j];
      ++j;
    }
  }
  return out;
}

std::string blocks(const FormulaPtr& f, bool positive) {
  if (bounded_rec(f)) return {};
  switch (f->kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Lt:
    case FormulaKind::Pred: return {};
    case FormulaKind::Not: return blocks(f->left(), !positive);
    case FormulaKind::And:
    case FormulaKind::Or:
      return merge_blocks(blocks(f->left(), positive), blocks(f->right(), positive));
    case FormulaKind::Implies:
      return merge_blocks(blocks(f->left(), !positive), blocks(f->right(), positive));
    case FormulaKind::Iff:
      // both directions of the biconditional, so both polarities of each side
      return merge_blocks(
          merge_blocks(blocks(f->left(), !positive), blocks(f->right(), positive)),
          merge_blocks(blocks(f->left(), positive), blocks(f->right(), !positive)));
    case FormulaKind::ForAll:
      return prepend_block(positive ? 'A' : 'E', blocks(f->body(), positive));
    case FormulaKind::Exists:
      return prepend_block(positive ? 'E' : 'A', blocks(f->body(), positive));
  }
  return {};
}

}  // namespace

bool is_bounded_formula(const FormulaPtr& f) { return bounded_rec(f); }

FormulaClass classify(const FormulaPtr& f) {
  if (contains_pred(f))
    throw std::invalid_argument("cannot classify a scheme template");
  if (is_atom(f)) return FormulaClass::atomic();
  if (is_quantifier_free(f)) return FormulaClass::quantifier_free();
  if (bounded_rec(f)) return FormulaClass::bounded();
  std::string b = blocks(f, true);
  // not bounded and not quantifier-free, so some quantifier contributed
  return FormulaClass::sigma(static_cast<unsigned>(b.size()));
}

}  // namespace indshape::fol
