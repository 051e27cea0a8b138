#include "doctest.h"
#include "expected_rules.hpp"
#include "helpers.hpp"

using namespace howard;

TEST_SUITE("rules") {
  TEST_CASE("scheme for the two-parameter by-name signature") {
    auto sig = parseSignature(
        "r OF T [D[x:int]:int] [A[f[X:int]:int]:T]: T");
    auto got = defscheme(sig);
    auto want = testutil::expectedSchemeR();
    CHECK_MESSAGE(ruleEquals(got, want), render(got, RuleFormat::Text));
  }

  TEST_CASE("scheme for the by-name composition signature") {
    auto got = defscheme(parseSignature(testutil::kTwiceByNameSig));
    auto want = testutil::expectedSchemeTwiceByName();
    CHECK_MESSAGE(ruleEquals(got, want), render(got, RuleFormat::Text));
  }

  TEST_CASE("by-value scheme binds a fresh name and substitutes") {
    auto got = defscheme_cbv(parseSignature(testutil::kTwiceByValueSig));
    auto want = testutil::expectedSchemeTwiceByValue();
    CHECK_MESSAGE(ruleEquals(got, want), render(got, RuleFormat::Text));
  }

  TEST_CASE("plain scheme generator refuses by-value signatures") {
    CHECK_THROWS_AS(defscheme(parseSignature(testutil::kTwiceByValueSig)),
                    Error);
  }

  TEST_CASE("derivation of the worked example reaches 36") {
    std::vector<std::string> trace;
    auto m = testutil::rulesValue(testutil::kDefR, &trace);
    REQUIRE(m->kind == MathExpr::Kind::Num);
    CHECK(m->num == 36);
    CHECK(!trace.empty());
  }

  TEST_CASE("constant folding can be disabled") {
    auto core = desugarProgram(parseProgram(testutil::kDefR),
                               testutil::lib().sigs);
    ReduceOptions opts;
    opts.fold = false;
    auto m = reduceProgram(core, nullptr, opts);
    CHECK(renderMath(m) == "((3·2)·(3·2))");
    CHECK(renderMath(mathFold(m)) == "36");
  }

  TEST_CASE("an empty program annihilates only unused chain variables") {
    auto empty = parseExpression("{}");
    REQUIRE(empty->kind == Expr::Kind::Seq);
    REQUIRE(empty->items.empty());

    Chain dead;
    dead.steps = {bindStep("θ", concreteFrag(empty))};
    dead.terminal = mNum(5);
    auto m = reduceChain(dead);
    REQUIRE(m->kind == MathExpr::Kind::Num);
    CHECK(m->num == 5);

    Chain live;
    live.steps = {bindStep("θ", concreteFrag(empty))};
    live.terminal = mHole("θ");
    CHECK_THROWS_WITH_AS(reduceChain(live),
                         doctest::Contains("occurs free"), Error);
  }

  TEST_CASE("math expression utilities") {
    auto m = mBin("*", mSym("c"), mBin("+", mNum(1), mNum(2)));
    CHECK(renderMath(mathFold(m)) == "(c·3)");
    CHECK(mathMentions(m, "c"));
    CHECK(!mathMentions(m, "d"));
    auto s = mathSubst(m, "c", mNum(4));
    CHECK(renderMath(mathFold(s)) == "12");
  }
}
