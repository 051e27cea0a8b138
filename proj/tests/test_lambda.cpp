#include "doctest.h"
#include "helpers.hpp"

using namespace howard;

TEST_SUITE("lambda") {
  TEST_CASE("normalization folds arithmetic") {
    auto t = mkOp("+", mkNum(1), mkOp("*", mkNum(2), mkNum(3)));
    auto n = normalize(t);
    REQUIRE(n->kind == Term::Kind::Num);
    CHECK(n->num == 7);
  }

  TEST_CASE("beta reduction is leftmost-outermost") {
    // (λx. 1) applied to a diverging term terminates.
    auto omega = mkApp(mkLam("y", mkApp(mkVar("y"), mkVar("y"))),
                       mkLam("y", mkApp(mkVar("y"), mkVar("y"))));
    auto t = mkApp(mkLam("x", mkNum(1)), omega);
    auto n = normalize(t);
    REQUIRE(n->kind == Term::Kind::Num);
    CHECK(n->num == 1);
  }

  TEST_CASE("diverging terms exhaust fuel") {
    auto omega = mkApp(mkLam("y", mkApp(mkVar("y"), mkVar("y"))),
                       mkLam("y", mkApp(mkVar("y"), mkVar("y"))));
    CHECK_THROWS_AS(normalize(omega, 1000), Error);
  }

  TEST_CASE("alpha equivalence") {
    auto a = mkLam("x", mkApp(mkVar("x"), mkVar("z")));
    auto b = mkLam("y", mkApp(mkVar("y"), mkVar("z")));
    auto c = mkLam("y", mkApp(mkVar("y"), mkVar("w")));
    CHECK(alphaEq(a, b));
    CHECK(!alphaEq(a, c));
  }

  TEST_CASE("substitution renames to avoid capture") {
    // (λy. x y)[y/x] must not capture the free y.
    auto t = mkLam("y", mkApp(mkVar("x"), mkVar("y")));
    auto s = substitute(t, "x", mkVar("y"));
    auto fv = freeTermVars(s);
    CHECK(fv.count("y") == 1);
    CHECK(alphaEq(s, mkLam("q", mkApp(mkVar("y"), mkVar("q")))));
  }

  TEST_CASE("translation of the worked example normalizes to 36") {
    CHECK(testutil::lambdaInt(testutil::kDefR) == 36);
  }

  TEST_CASE("translation rejects by-value parameters and effects") {
    NameSupply ns;
    auto core1 = desugarProgram(parseProgram("with(3) u; u*u"),
                                testutil::lib().sigs);
    CHECK_THROWS_AS(translate(core1, testutil::lib().sigs, ns), Error);
    auto core2 = desugarProgram(parseProgram("{var x; x:=1; x._}"),
                                testutil::lib().sigs);
    CHECK_THROWS_AS(translate(core2, testutil::lib().sigs, ns), Error);
  }
}
