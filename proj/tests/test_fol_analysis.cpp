#include <doctest.h>

#include <string>
#include <vector>

#include "indshape/fol/classify.hpp"
#include "indshape/fol/dnf.hpp"
#include "indshape/fol/parse.hpp"
#include "indshape/model/nat_eval.hpp"
#include "support.hpp"

using namespace indshape;
using indshape::test::Rng;

namespace {

fol::FormulaClass classify_text(const std::string& s) {
  return fol::classify(fol::parse_formula(s));
}

}  // namespace

TEST_CASE("classification finds the smallest class") {
  CHECK(classify_text("x + 0 = x") == fol::FormulaClass::atomic());
  CHECK(classify_text("~x = 0") == fol::FormulaClass::quantifier_free());
  CHECK(classify_text("x = 0 | x = 1") == fol::FormulaClass::quantifier_free());
  CHECK(classify_text("!y. (y < x -> y = 0)") == fol::FormulaClass::bounded());
  CHECK(classify_text("?y. x = y + y") == fol::FormulaClass::sigma(1));
  CHECK(classify_text("?y. !z. (x < z -> y < z)") == fol::FormulaClass::sigma(2));
}

TEST_CASE("bounded quantifier patterns are recognized both ways") {
  CHECK(fol::is_bounded_formula(fol::parse_formula("!y. (y < x -> y = 0)")));
  CHECK(fol::is_bounded_formula(fol::parse_formula("?y. (y < x & x = y + y)")));
  // The bound may not mention the quantified variable.
  CHECK_FALSE(fol::is_bounded_formula(fol::parse_formula("!y. (y < y + x -> y = 0)")));
  CHECK_FALSE(fol::is_bounded_formula(fol::parse_formula("!y. y = 0")));
  // Bounded blocks inside a bounded matrix stay bounded.
  CHECK(classify_text("!y. (y < x -> ?z. (z < y & z + z = y))") == fol::FormulaClass::bounded());
}

TEST_CASE("class order is total and subsumption follows rank") {
  using FC = fol::FormulaClass;
  std::vector<FC> chain = {FC::atomic(), FC::quantifier_free(), FC::bounded(), FC::sigma(1),
                           FC::sigma(2), FC::unrestricted()};
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = 0; j < chain.size(); ++j)
      CHECK(fol::class_within(chain[i], chain[j]) == (chain[i].rank() <= chain[j].rank()));
}

TEST_CASE("class names round trip through parse") {
  for (const char* s : {"atomic", "qf", "bounded", "sigma:1", "sigma:3", "any"}) {
    auto c = fol::FormulaClass::parse(s);
    REQUIRE(c.has_value());
    CHECK(c->to_string() == s);
  }
  CHECK_FALSE(fol::FormulaClass::parse("sigma"));
  CHECK_FALSE(fol::FormulaClass::parse("pi:1"));
}

TEST_CASE("adding a quantifier never shrinks the class") {
  Rng rng(20240812);
  for (int i = 0; i < 200; ++i) {
    auto f = test::random_qf(rng, {"x", "y"}, 3);
    auto q = test::rng_below(rng, 2) ? fol::forall("x", f) : fol::exists("x", f);
    CHECK(fol::classify(f).rank() <= fol::classify(q).rank());
  }
}

TEST_CASE("dnf preserves truth at every small point") {
  Rng rng(20240813);
  for (int i = 0; i < 150; ++i) {
    auto f = test::random_qf(rng, {"x", "y"}, 3, /*allow_less=*/false);
    auto disjuncts = fol::to_dnf(f);
    test::for_each_env({"x", "y"}, 4, [&](const model::NatEnv& env) {
      bool direct = model::nat_bounded_eval(f, env, 0);
      bool via_dnf = false;
      for (const auto& c : disjuncts) {
        bool all = true;
        for (const auto& [l, r] : c.equalities)
          all = all && model::nat_eval_term(l, env) == model::nat_eval_term(r, env);
        for (const auto& [l, r] : c.inequations)
          all = all && model::nat_eval_term(l, env) != model::nat_eval_term(r, env);
        if (all) {
          via_dnf = true;
          break;
        }
      }
      CHECK(direct == via_dnf);
    });
  }
}

TEST_CASE("dnf rejects less and quantifiers") {
  CHECK_THROWS(fol::to_dnf(fol::parse_formula("x < 1")));
  CHECK_THROWS(fol::to_dnf(fol::parse_formula("?y. x = y")));
}

TEST_CASE("dnf distribution respects the literal cap") {
  // (a=0|b=0) & (c=0|d=0) & ... doubles per clause; a tiny cap must trip.
  std::string s = "(a = 0 | b = 0)";
  for (char v = 'c'; v < 'o'; v += 2)
    s += " & (" + std::string(1, v) + " = 0 | " + std::string(1, char(v + 1)) + " = 0)";
  CHECK_THROWS_AS(fol::to_dnf(fol::parse_formula(s), 100), fol::ResourceLimitError);
  CHECK_NOTHROW(fol::to_dnf(fol::parse_formula(s), 1000000));
}

TEST_CASE("the empty conjunct convention marks tautologies") {
  auto d = fol::to_dnf(fol::parse_formula("x = x"));
  REQUIRE(d.size() == 1);
  // x = x survives as a (trivial) equality; truth is the evaluator's business.
  CHECK(d[0].equalities.size() == 1);
  CHECK(d[0].inequations.empty());
}
