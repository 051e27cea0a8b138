#include "doctest.h"
#include "helpers.hpp"

using namespace howard;
using testutil::evalInt;
using testutil::runProgram;

TEST_SUITE("eval") {
  TEST_CASE("arithmetic and comparisons") {
    CHECK(evalInt("2*3+4*5") == 26);
    CHECK(evalInt("10-3-4") == 3);
    CHECK(evalInt("100/7") == 14);
    CHECK(evalInt("1 < 2") == 1);
    CHECK(evalInt("2 < 1") == 0);
    CHECK(evalInt("3 = 3") == 1);
    CHECK(evalInt("3 > 4") == 0);
  }

  TEST_CASE("arithmetic faults") {
    CHECK_THROWS_AS(evalInt("1/0"), Error);
    CHECK_THROWS_AS(evalInt("9223372036854775807 + 1"), Error);
  }

  TEST_CASE("worked definition examples") {
    CHECK(evalInt(testutil::kDefR) == 36);
    CHECK(evalInt(testutil::twiceByNameCall("f{2}")) == 16);
  }

  TEST_CASE("recursion through the defined name") {
    CHECK(evalInt("{ DEF fact [N:int]:int { if(N=0, 1, N*fact{N-1}) }; "
                  "fact{5} }") == 120);
  }

  TEST_CASE("variables") {
    CHECK(evalInt("{ var x; x:=3; x._+4 }") == 7);
    CHECK(evalInt("{ var x; x:=0; x:=x+1; x:=x+1; x._ }") == 2);
    CHECK_THROWS_AS(evalInt("{ var x; x._ }"), Error);
  }

  TEST_CASE("assignments and prints are logged") {
    auto out = runProgram("{ var x; x:=7; stdout << x._ << nl }");
    bool sawAssign = false, sawPrint = false;
    for (const auto& f : out.effects) {
      if (f.rfind("ASSIGN", 0) == 0 && f.find(" 7") != std::string::npos)
        sawAssign = true;
      if (f.rfind("PRINT 7", 0) == 0) sawPrint = true;
    }
    CHECK(sawAssign);
    CHECK(sawPrint);
    CHECK(out.printed == "7\n");
  }

  TEST_CASE("value binding evaluates once") {
    CHECK(evalInt("with(3) u; u*u") == 9);
  }

  TEST_CASE("conditionals and loops") {
    CHECK(evalInt("if(1=1, 10, 20)") == 10);
    CHECK(evalInt("if(1=2, 10, 20)") == 20);
    CHECK(evalInt("{var i; var acc; i:=0; acc:=0; "
                  "while{i<5}{acc:=acc+(2*(i:=i+1)-1)}; acc._}") == 25);
  }

  TEST_CASE("structural recursion over lists") {
    CHECK(evalInt("induction{[3,5,7]} L: "
                  "{ split_list{L}{1}{hd*result{tl}} }") == 105);
    CHECK(evalInt("induction(5) i:{if(i=0,0,(2*i-1)+result(i-1))}") == 25);
  }

  TEST_CASE("sorting under a caller-chosen order") {
    CHECK(renderValue(runProgram(
              "{var acc; acc:=nil; sort{x>y}{put(3);put(1);put(2)}"
              "{all{acc := x :: acc._}}; acc._}").value) == "[1, 2, 3]");
    CHECK(renderValue(runProgram(
              "{var acc; acc:=nil; sort{x<y}{put(3);put(1);put(2)}"
              "{all{acc := x :: acc._}}; acc._}").value) == "[3, 2, 1]");
  }

  TEST_CASE("by-name arguments re-evaluate, by-value arguments do not") {
    auto countSteps = [](const testutil::RunOut& o) {
      int n = 0;
      for (const auto& f : o.effects)
        if (f.rfind("PRINT Step", 0) == 0) ++n;
      return n;
    };
    std::string call =
        "{var t; t:=0; f{stdout << ~\"Step \" << t:=t+1 << nl; 2}}";
    auto cbn = runProgram(
        "DEF twice OF W [F[x:int]:int] [Return[f[X:int]:int] :W]:W "
        "{ Return{F{F{X}}} } { twice{x*x} " + call + " }");
    CHECK(renderValue(cbn.value) == "16");
    CHECK(countSteps(cbn) == 4);
    auto cbv = runProgram(
        "DEF twice OF W [F(x:int):int] [Return[f(X:int):int] :W] : W "
        "{ Return{with(X) u; F{F{u}}} } { twice{x*x} " + call + " }");
    CHECK(renderValue(cbv.value) == "16");
    CHECK(countSteps(cbv) == 1);
  }

  TEST_CASE("step budget") {
    auto core = desugarProgram(
        parseProgram("{ DEF f [X:int]:int { f{X} }; f{1} }"),
        testutil::lib().sigs);
    infer(core, testutil::lib().types);
    Store st;
    st.fuel = 1000;
    CHECK_THROWS_AS(eval(core, testutil::lib().runtime, st), Error);
  }

  TEST_CASE("unimplemented operations are typed but refuse to run") {
    CHECK_THROWS_AS(runProgram("unix{await_all}"), Error);
  }
}
