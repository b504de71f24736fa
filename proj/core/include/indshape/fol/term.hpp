#ifndef INDSHAPE_FOL_TERM_HPP
#define INDSHAPE_FOL_TERM_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>

namespace indshape::fol {

class Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind { Var, Zero, One, Add, Mul };

/**
 * Immutable first-order term over the signature {0, 1, +, *}.
 * Subterms are shared; a TermPtr is never null inside a well-formed term.
 */
class Term {
 public:
  TermKind kind() const { return kind_; }

  const std::string& var_name() const { return name_; }
  const TermPtr& left() const { return left_; }
  const TermPtr& right() const { return right_; }

  static TermPtr var(std::string name);
  static TermPtr zero();
  static TermPtr one();
  static TermPtr add(TermPtr l, TermPtr r);
  static TermPtr mul(TermPtr l, TermPtr r);

 private:
  explicit Term(TermKind k) : kind_(k) {}

  TermKind kind_;
  std::string name_;
  TermPtr left_, right_;
};

// Left-nested sum (..((0+1)+1)..+1) with n ones.
TermPtr numeral(unsigned long n);

// The idiomatic constant term for n: the symbols 0 and 1 for n < 2,
// the numeral otherwise.
TermPtr nat_term(unsigned long n);

// Exact value of a term that is literally a left-nested numeral, else nullopt.
// (0+1)+1 has value 2; 1+1 has none.
std::optional<unsigned long> numeral_value(const TermPtr& t);

bool term_equal(const TermPtr& a, const TermPtr& b);

void collect_term_vars(const TermPtr& t, std::set<std::string>& out);
std::set<std::string> term_vars(const TermPtr& t);

// Replaces every occurrence of variable v by r. Terms bind nothing,
// so this is plain structural replacement.
TermPtr replace_var(const TermPtr& t, const std::string& v, const TermPtr& r);

size_t term_size(const TermPtr& t);

}  // namespace indshape::fol

#endif
