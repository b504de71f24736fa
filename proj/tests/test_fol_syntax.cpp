#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "indshape/fol/formula.hpp"
#include "indshape/fol/parse.hpp"
#include "indshape/fol/print.hpp"
#include "indshape/fol/term.hpp"
#include "support.hpp"

using namespace indshape;
using indshape::test::Rng;

TEST_CASE("numerals are left-nested and recover their value") {
  CHECK(fol::term_equal(fol::numeral(0), fol::Term::zero()));
  CHECK(fol::term_equal(fol::numeral(1), fol::Term::add(fol::Term::zero(), fol::Term::one())));
  CHECK(fol::term_equal(fol::numeral(3),
                        fol::Term::add(fol::Term::add(fol::numeral(1), fol::Term::one()),
                                       fol::Term::one())));
  for (unsigned long n : {0ul, 1ul, 2ul, 7ul, 40ul}) {
    auto v = fol::numeral_value(fol::numeral(n));
    REQUIRE(v.has_value());
    CHECK(*v == n);
  }
  // 1+1 is not the numeral 2: the numeral spine starts at 0.
  CHECK_FALSE(fol::numeral_value(fol::Term::add(fol::Term::one(), fol::Term::one())));
}

TEST_CASE("nat_term prefers the constants below 2") {
  CHECK(fol::term_equal(fol::nat_term(0), fol::Term::zero()));
  CHECK(fol::term_equal(fol::nat_term(1), fol::Term::one()));
  CHECK(fol::term_equal(fol::nat_term(2), fol::numeral(2)));
}

TEST_CASE("replace_var only touches the named variable") {
  auto t = fol::parse_term("x + y * x");
  auto r = fol::replace_var(t, "x", fol::numeral(2));
  CHECK(fol::print_term(r) == "2 + y * 2");
  CHECK(fol::term_vars(r) == std::set<std::string>{"y"});
  CHECK(fol::term_equal(fol::replace_var(t, "q", fol::Term::zero()), t));
}

TEST_CASE("free variables respect binding and shadowing") {
  auto f = fol::parse_formula("!y. (x < y -> ?x. x = y)");
  CHECK(fol::free_vars(f) == std::set<std::string>{"x"});
  CHECK(fol::all_names(f) == std::set<std::string>{"x", "y"});
  CHECK(fol::free_vars(fol::parse_formula("0 = 0")).empty());
}

TEST_CASE("substitution renames binders that would capture") {
  auto f = fol::parse_formula("?y. x = y + y");
  auto g = fol::substitute(f, "x", fol::parse_term("y + 1"));
  // The bound y must not swallow the free y of the replacement.
  CHECK(fol::free_vars(g) == std::set<std::string>{"y"});
  CHECK(fol::alpha_equal(g, fol::parse_formula("?w. y + 1 = w + w")));
  CHECK_FALSE(fol::alpha_equal(g, fol::parse_formula("?y. y + 1 = y + y")));
}

TEST_CASE("leq elaborates to the strict-or-equal disjunction") {
  auto f = fol::leq(fol::Term::var("a"), fol::Term::var("b"));
  CHECK(fol::print_text(f) == "a < b | a = b");
}

TEST_CASE("empty conjunction and disjunction follow the 0 = 0 convention") {
  CHECK(fol::print_text(fol::conjoin({})) == "0 = 0");
  CHECK(fol::print_text(fol::disjoin({})) == "~0 = 0");
  auto a = fol::parse_formula("x = 0");
  CHECK(fol::alpha_equal(fol::conjoin({a}), a));
  CHECK(fol::alpha_equal(fol::disjoin({a}), a));
}

TEST_CASE("conjoin folds left") {
  auto a = fol::parse_formula("x = 0");
  auto b = fol::parse_formula("x = 1");
  auto c = fol::parse_formula("x = 2");
  CHECK(fol::alpha_equal(fol::conjoin({a, b, c}), fol::land(fol::land(a, b), c)));
}

TEST_CASE("fresh_name skips everything in the avoid set") {
  CHECK(fol::fresh_name("y", {}) == "y");
  CHECK(fol::fresh_name("y", {"y"}) == "y_1");
  CHECK(fol::fresh_name("y", {"y", "y_1", "y_2"}) == "y_3");
}

TEST_CASE("parser handles precedence and associativity") {
  CHECK(fol::print_term(fol::parse_term("a + b * c")) == "a + b * c");
  CHECK(fol::print_term(fol::parse_term("(a + b) * c")) == "(a + b) * c");
  CHECK(fol::print_term(fol::parse_term("a + b + c")) ==
        fol::print_term(fol::parse_term("(a + b) + c")));
  // -> is right associative, <-> binds loosest.
  auto f = fol::parse_formula("a = 0 -> b = 0 -> c = 0");
  CHECK(fol::alpha_equal(f, fol::parse_formula("a = 0 -> (b = 0 -> c = 0)")));
  auto g = fol::parse_formula("a = 0 & b = 0 | c = 0 <-> d = 0");
  CHECK(g->kind() == fol::FormulaKind::Iff);
  CHECK(g->left()->kind() == fol::FormulaKind::Or);
  CHECK(g->left()->left()->kind() == fol::FormulaKind::And);
}

TEST_CASE("quantifier scope extends as far as possible") {
  auto f = fol::parse_formula("!x. x = 0 -> x = 1");
  CHECK(f->kind() == fol::FormulaKind::ForAll);
  CHECK(fol::free_vars(f).empty());
}

TEST_CASE("comparison sugar expands to < and =") {
  CHECK(fol::print_text(fol::parse_formula("a <= b")) == "a < b | a = b");
  CHECK(fol::print_text(fol::parse_formula("a > b")) == "b < a");
  CHECK(fol::print_text(fol::parse_formula("a >= b")) == "b < a | b = a");
}

TEST_CASE("decimal literals expand to numerals") {
  auto f = fol::parse_formula("x = 12");
  CHECK(fol::numeral_value(f->rhs()) == 12ul);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(fol::parse_formula("x +"), fol::ParseError);
  CHECK_THROWS_AS(fol::parse_formula("x = = 0"), fol::ParseError);
  CHECK_THROWS_AS(fol::parse_formula("!. x = 0"), fol::ParseError);
  CHECK_THROWS_AS(fol::parse_formula(""), fol::ParseError);
  try {
    fol::parse_formula("x = 0 & & y = 0");
    FAIL("expected ParseError");
  } catch (const fol::ParseError& e) {
    CHECK(e.position == 8);
  }
}

TEST_CASE("predicate atoms parse only in template mode") {
  CHECK_THROWS_AS(fol::parse_formula("X(0)"), fol::ParseError);
  auto t = fol::parse_template("X(0) & !y. (X(y) -> X(y + 1)) -> !y. X(y)");
  CHECK(fol::contains_pred(t));
}

TEST_CASE("printing compacts maximal numeral subterms only") {
  CHECK(fol::print_term(fol::numeral(2)) == "2");
  CHECK(fol::print_term(fol::numeral(1)) == "0 + 1");
  CHECK(fol::print_term(fol::Term::add(fol::numeral(2), fol::Term::one())) == "3");
  CHECK(fol::print_term(fol::Term::add(fol::Term::one(), fol::numeral(2))) == "1 + 2");
}

TEST_CASE("alpha-equal formulas print identically") {
  auto f = fol::parse_formula("!a. ?b. a < b");
  auto g = fol::parse_formula("!p. ?q. p < q");
  CHECK(fol::alpha_equal(f, g));
  CHECK(fol::print_text(f) == fol::print_text(g));
  CHECK(fol::print_text(f) == "!v0. ?v1. v0 < v1");
}

TEST_CASE("bound renaming avoids free names") {
  // v0 occurs free, so the binder must pick the next slot.
  auto f = fol::parse_formula("!y. y < v0");
  CHECK(fol::print_text(f) == "!v1. v1 < v0");
}

TEST_CASE("print-parse round trip is alpha-stable on random formulas") {
  Rng rng(20240811);
  for (int i = 0; i < 300; ++i) {
    auto f = test::random_qf(rng, {"x", "y"}, 4);
    auto back = fol::parse_formula(fol::print_text(f));
    CHECK(fol::alpha_equal(f, back));
  }
  // With quantifiers on top.
  for (int i = 0; i < 100; ++i) {
    auto body = test::random_qf(rng, {"x", "y"}, 3);
    auto f = fol::forall("x", fol::exists("y", body));
    CHECK(fol::alpha_equal(f, fol::parse_formula(fol::print_text(f))));
  }
}

TEST_CASE("tptp rendering maps the signature and uppercases variables") {
  auto f = fol::parse_formula("x + 0 < x * 1 | x = 1");
  std::string line = fol::print_tptp("a1", "axiom", f);
  CHECK(line == "fof(a1, axiom, ![X]: (less(plus(X, zero), times(X, one)) | X = one)).");
  auto closed = fol::parse_formula("?y. y = 0");
  CHECK(fol::print_tptp("c", "conjecture", closed) ==
        "fof(c, conjecture, ?[Y]: (Y = zero)).");
}
