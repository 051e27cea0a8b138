#include <functional>

#include "corpus.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "parser.hpp"
#include "printer.hpp"

using namespace howard;

namespace {

// parse → print must be a fixpoint of print ∘ parse.
void checkExprRoundTrip(const std::string& src) {
  std::string p1 = printExpr(parseProgram(src));
  std::string p2 = printExpr(parseProgram(p1));
  CHECK_MESSAGE(p1 == p2, "source: ", src, "\nfirst: ", p1, "\nsecond: ", p2);
}

void checkSigRoundTrip(const std::string& src) {
  std::string p1 = printSignature(parseSignature(src));
  std::string p2 = printSignature(parseSignature(p1));
  CHECK_MESSAGE(p1 == p2, "signature: ", src);
}

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("signature shapes") {
    auto sig = parseSignature(testutil::kTwiceByNameSig);
    CHECK(sig->name == "twice");
    REQUIRE(sig->typeParams.size() == 1);
    CHECK(sig->typeParams[0].name == "W");
    REQUIRE(sig->params.size() == 2);
    CHECK(sig->params[0].kind == ParamGroup::Kind::ByName);
    CHECK(sig->params[0].byName->name == "F");
    CHECK(sig->params[1].byName->name == "Return");
    // Return's member f has a nested by-name parameter X.
    auto ret = sig->params[1].byName;
    REQUIRE(ret->params.size() == 1);
    CHECK(ret->params[0].byName->name == "f");
    CHECK(sig->aritySlots() == 2);
  }

  TEST_CASE("by-value slots are parenthesized") {
    auto sig = parseSignature(testutil::kTwiceByValueSig);
    REQUIRE(sig->params.size() == 2);
    // The parameter F itself is a member level; its parameter x is by-value.
    REQUIRE(sig->params[0].kind == ParamGroup::Kind::ByName);
    auto f = sig->params[0].byName;
    REQUIRE(f->params.size() == 1);
    REQUIRE(f->params[0].kind == ParamGroup::Kind::ByValue);
    REQUIRE(f->params[0].byValue.size() == 1);
    CHECK(f->params[0].byValue[0]->name == "x");
  }

  TEST_CASE("operator members") {
    auto unixSig = stdlibSignature("unix");
    REQUIRE(unixSig);
    // Somewhere in the nested levels there are operator parameters.
    std::function<bool(const SigPtr&)> hasOperator =
        [&](const SigPtr& s) -> bool {
      for (const auto& g : s->params) {
        if (g.kind == ParamGroup::Kind::Operator) return true;
        if (g.kind == ParamGroup::Kind::ByName && hasOperator(g.byName))
          return true;
      }
      return false;
    };
    CHECK(hasOperator(unixSig));
  }

  TEST_CASE("precedence: stream operators bind loosest, assignment next") {
    auto e = parseExpression("stdout << t := t + 1 << nl");
    REQUIRE(e->kind == Expr::Kind::Infix);
    CHECK(e->sym == "<<");
    // Rightmost << at the top; its left operand is another <<.
    REQUIRE(e->lhs->kind == Expr::Kind::Infix);
    CHECK(e->lhs->sym == "<<");
    CHECK(e->lhs->rhs->sym == ":=");
    CHECK(e->lhs->rhs->rhs->sym == "+");
  }

  TEST_CASE("arithmetic precedence and associativity") {
    auto e = parseExpression("10 - 3 - 4 * 2");
    CHECK(e->sym == "-");
    CHECK(e->lhs->sym == "-");
    CHECK(e->rhs->sym == "*");
  }

  TEST_CASE("list literals") {
    auto e = parseExpression("[3, 5, 7]");
    REQUIRE(e->kind == Expr::Kind::ListLit);
    CHECK(e->items.size() == 3);
  }

  TEST_CASE("definition with both bodies") {
    auto p = parseProgram(testutil::kDefR);
    if (p->kind == Expr::Kind::Seq) {
      REQUIRE(p->items.size() == 1);
      p = p->items[0];
    }
    REQUIRE(p->kind == Expr::Kind::Def);
    CHECK(p->sig->name == "r");
    CHECK(p->defBody != nullptr);
    CHECK(p->appBody != nullptr);
  }

  TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parseProgram("r{x*"), Error);
    CHECK_THROWS_AS(parseSignature("f [x:] : int"), Error);
  }
}

TEST_SUITE("printer") {
  TEST_CASE("expression round-trips on the corpus") {
    for (const auto& entry : testutil::pureCorpus())
      checkExprRoundTrip(entry.src);
  }

  TEST_CASE("expression round-trips on effectful programs") {
    checkExprRoundTrip(testutil::kTwiceByName);
    checkExprRoundTrip(testutil::kTwiceByValue);
    checkExprRoundTrip("{var t; t:=0; f{stdout << ~\"Step \" << t:=t+1 << nl; 2} }");
    checkExprRoundTrip("induction{[3,5,7]} L: { split_list{L}{1}{hd*result{tl}} }");
    checkExprRoundTrip("with(3) u; u*u");
  }

  TEST_CASE("signature round-trips, including operator members") {
    checkSigRoundTrip(testutil::kTwiceByNameSig);
    checkSigRoundTrip(testutil::kTwiceByValueSig);
    for (const char* name : {"program", "var", "with", "if", "while",
                             "induction", "split_list", "sort", "unix"}) {
      auto sig = stdlibSignature(name);
      REQUIRE(sig);
      std::string s1 = printSignature(sig);
      std::string s2 = printSignature(parseSignature(s1));
      CHECK_MESSAGE(s1 == s2, "signature '", name, "'");
    }
  }
}
