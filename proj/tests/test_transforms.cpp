#include <doctest.h>

#include <string>
#include <vector>

#include "indshape/fol/dnf.hpp"
#include "indshape/fol/parse.hpp"
#include "indshape/fol/print.hpp"
#include "indshape/model/nat_eval.hpp"
#include "indshape/transforms/kaye.hpp"
#include "indshape/transforms/transforms.hpp"
#include "support.hpp"

using namespace indshape;
using indshape::test::Rng;

namespace {

fol::FormulaPtr fp(const char* s) { return fol::parse_formula(s); }

bool holds(const fol::FormulaPtr& f, const model::NatEnv& env) {
  return model::nat_bounded_eval(f, env, 0);
}

}  // namespace

TEST_CASE("normalization matches the transcribed shapes") {
  CHECK(fol::alpha_equal(transforms::axiom_to_inductive(fp("x = x"), "x", {}),
                         test::golden_formula("transforms/norm_refl.txt")));
  CHECK(fol::alpha_equal(transforms::axiom_to_inductive(fp("x < z"), "x", {"z"}),
                         test::golden_formula("transforms/norm_lt_param.txt")));
}

TEST_CASE("normalization always leaves exactly the induction variable free") {
  Rng rng(20240818);
  for (int i = 0; i < 100; ++i) {
    auto theta = test::random_qf(rng, {"x", "z"}, 3);
    auto phi = transforms::axiom_to_inductive(theta, "x", {"z"});
    CHECK(fol::free_vars(phi) == std::set<std::string>{"x"});
  }
  // even when theta ignores x entirely
  auto phi = transforms::axiom_to_inductive(fp("z = z"), "x", {"z"});
  CHECK(fol::free_vars(phi) == std::set<std::string>{"x"});
}

TEST_CASE("the fresh step binder dodges collisions") {
  // theta already uses y, so the inner binder must rename.
  auto phi = transforms::axiom_to_inductive(fp("x + y = y + x"), "x", {"y"});
  CHECK(fol::free_vars(phi) == std::set<std::string>{"x"});
  CHECK(fol::alpha_equal(
      phi, fp("!y. ((0 + y = y + 0 & !w. (w + y = y + w -> w + 1 + y = y + (w + 1))) -> "
              "x + y = y + x)")));
}

TEST_CASE("merge matches the transcribed pair and folds left") {
  std::vector<transforms::MergeEntry> pair = {{fp("x + 0 = x"), "x", {}},
                                              {fp("x * 1 = x"), "x", {}}};
  auto merged = transforms::merge(pair);
  CHECK(fol::alpha_equal(merged, test::golden_formula("transforms/merge_pair.txt")));
  CHECK(fol::alpha_equal(merged,
                         fol::land(transforms::merge({pair[0]}), transforms::merge({pair[1]}))));
  CHECK(fol::alpha_equal(transforms::merge({pair[0]}),
                         transforms::axiom_to_inductive(fp("x + 0 = x"), "x", {})));
  CHECK_THROWS(transforms::merge({}));
}

TEST_CASE("merge renames every entry to the first induction variable") {
  auto merged = transforms::merge({{fp("x + 0 = x"), "x", {}}, {fp("w * 1 = w"), "w", {}}});
  CHECK(fol::free_vars(merged) == std::set<std::string>{"x"});
}

TEST_CASE("merged base and step hold in N for the classic pair") {
  auto merged = transforms::merge({{fp("x + 0 = x"), "x", {}}, {fp("x * 1 = x"), "x", {}}});
  CHECK(test::obligations_hold_bounded(merged, "x", schemes::Notion::successor(), 16));
}

TEST_CASE("equivalence shaping matches the transcribed form") {
  auto phi = transforms::equivalence_shape(fp("0 = 0"), fp("x = x"));
  CHECK(fol::alpha_equal(phi, test::golden_formula("transforms/equiv_basic.txt")));
  CHECK(fol::free_vars(phi) == std::set<std::string>{"x"});
}

TEST_CASE("equivalence shaping evaluates as intended in N") {
  // sigma true: the shape is vacuously true at every point
  auto t = transforms::equivalence_shape(fp("0 < 1"), fp("x = 1"));
  for (unsigned long m : {0ul, 1ul, 5ul}) CHECK(holds(t, {{"x", model::Int(m)}}));
  // sigma false: the shape collapses to its carrier
  auto f = transforms::equivalence_shape(fp("1 < 0"), fp("x = 1"));
  CHECK_FALSE(holds(f, {{"x", model::Int(0)}}));
  CHECK(holds(f, {{"x", model::Int(1)}}));
}

TEST_CASE("template substitution plugs the formula into every slot") {
  transforms::SchemeTemplate succ{
      fol::parse_template("X(0) & !y. (X(y) -> X(y + 1)) -> !y. X(y)")};
  auto got = transforms::scheme_substitute(succ, fp("x = x"), "x", {});
  CHECK(fol::alpha_equal(got,
                         schemes::induction_axiom(fp("x = x"), "x", {},
                                                  schemes::Notion::successor())));

  transforms::SchemeTemplate single{fol::parse_template("X(0)")};
  CHECK(fol::print_text(transforms::scheme_substitute(single, fp("x < 1"), "x", {})) == "0 < 1");

  transforms::SchemeTemplate none{fol::parse_template("0 = 0")};
  CHECK(fol::print_text(transforms::scheme_substitute(none, fp("x = x"), "x", {"z"})) ==
        "!v0. 0 = 0");
}

TEST_CASE("template substitution avoids capturing argument variables") {
  // X(y) inside a y binder, phi mentioning its own y only through x
  transforms::SchemeTemplate t{fol::parse_template("!y. X(y + 1)")};
  auto got = transforms::scheme_substitute(t, fp("?y. x = y + y"), "x", {});
  CHECK(fol::alpha_equal(got, fp("!w. ?u. w + 1 = u + u")));
}

TEST_CASE("gallery outputs match the transcribed shapes") {
  transforms::GalleryInputs in;
  in.phi = fp("x + 0 = x");
  in.delta = fp("x * x = x");
  in.m = 1;
  in.n = 2;
  for (const char* name : transforms::gallery_names()) {
    CAPTURE(name);
    CHECK(fol::alpha_equal(transforms::gallery(name, in),
                           test::golden_formula(std::string("transforms/gallery_") + name +
                                                ".txt")));
  }
  CHECK_THROWS(transforms::gallery("rho1", in));
}

TEST_CASE("gallery constructions keep x as the only free variable") {
  transforms::GalleryInputs in;
  in.phi = fp("x < 1");
  in.delta = fp("1 < x");
  in.m = 3;
  in.n = 1;
  for (const char* name : transforms::gallery_names()) {
    CAPTURE(name);
    CHECK(fol::free_vars(transforms::gallery(name, in)) == std::set<std::string>{"x"});
  }
}

TEST_CASE("chi uses the modulus knob") {
  transforms::GalleryInputs in;
  in.phi = fp("~x = x");  // never holds, so chi is pure divisibility
  in.m = 2;
  auto chi = transforms::gallery("chi", in);
  CHECK(fol::alpha_equal(chi, fp("~x = x | ?y. x = 3 * y")));
  for (unsigned long m = 0; m <= 12; ++m)
    CHECK(holds(chi, {{"x", model::Int(m)}}) == (m % 3 == 0));
}

TEST_CASE("kaye reduction of the empty conjunct is identically true") {
  auto r = transforms::kaye_reduce({});
  CHECK(fol::print_term(r.p_left) == "0");
  CHECK(fol::print_term(r.p_right) == "0");
  CHECK(fol::print_term(r.q_left) == "1");
  CHECK(fol::print_term(r.q_right) == "0");
  CHECK(holds(r.characteristic(), {}));
}

TEST_CASE("kaye reduction builds the square pair per equality") {
  fol::DnfConjunct c;
  c.equalities.push_back({fol::parse_term("x"), fol::parse_term("y")});
  auto r = transforms::kaye_reduce(c);
  CHECK(fol::print_term(r.p_left) == "x * x + y * y");
  CHECK(fol::print_term(r.p_right) == "2 * (x * y)");
  test::for_each_env({"x", "y"}, 6, [&](const model::NatEnv& env) {
    CHECK((env.at("x") == env.at("y")) == holds(r.equation(), env));
  });
}

TEST_CASE("kaye reduction is point-equivalent on random conjuncts") {
  Rng rng(20240819);
  for (int i = 0; i < 120; ++i) {
    fol::DnfConjunct c;
    size_t ne = test::rng_below(rng, 3), ni = test::rng_below(rng, 3);
    for (size_t j = 0; j < ne; ++j)
      c.equalities.push_back(
          {test::random_term(rng, {"x", "y"}, 2), test::random_term(rng, {"x", "y"}, 2)});
    for (size_t j = 0; j < ni; ++j)
      c.inequations.push_back(
          {test::random_term(rng, {"x", "y"}, 2), test::random_term(rng, {"x", "y"}, 2)});
    auto r = transforms::kaye_reduce(c);
    test::for_each_env({"x", "y"}, 6, [&](const model::NatEnv& env) {
      bool direct = true;
      for (const auto& [l, rr] : c.equalities)
        direct = direct && model::nat_eval_term(l, env) == model::nat_eval_term(rr, env);
      for (const auto& [l, rr] : c.inequations)
        direct = direct && model::nat_eval_term(l, env) != model::nat_eval_term(rr, env);
      CHECK(direct == holds(r.characteristic(), env));
    });
  }
}

TEST_CASE("kaye equation side is syntactically a sum of square pairs") {
  fol::DnfConjunct c;
  c.equalities.push_back({fol::parse_term("x + 1"), fol::parse_term("y")});
  c.equalities.push_back({fol::parse_term("x * y"), fol::parse_term("0")});
  auto r = transforms::kaye_reduce(c);
  // left side: s*s + t*t summands in order
  CHECK(fol::print_term(r.p_left) ==
        "(x + 1) * (x + 1) + y * y + (x * y * (x * y) + 0 * 0)");
}
