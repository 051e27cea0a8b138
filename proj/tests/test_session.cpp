#include "doctest.h"
#include "helpers.hpp"

using namespace howard;
using testutil::readGolden;
using testutil::replTranscript;

TEST_SUITE("session") {
  TEST_CASE("interactive transcript, by-name definition") {
    std::string got = replTranscript(testutil::kTwiceByName,
                                     {testutil::kStepInput});
    std::string want = readGolden("repl_cbn.txt");
    REQUIRE(!want.empty());
    CHECK(got == want);
  }

  TEST_CASE("interactive transcript, by-value definition") {
    std::string got = replTranscript(testutil::kTwiceByValue,
                                     {testutil::kStepInput});
    std::string want = readGolden("repl_cbv.txt");
    REQUIRE(!want.empty());
    CHECK(got == want);
  }

  TEST_CASE("top-level definitions persist across inputs") {
    std::string got = replTranscript(
        "", {"DEF f [X:int]:int { X*3 };", "f{7};"});
    CHECK(got.find("21") != std::string::npos);
  }

  TEST_CASE("an error does not end the session") {
    std::string got = replTranscript("", {"1+", "2"});
    size_t err = got.find("SyntaxError");
    REQUIRE(err != std::string::npos);
    // The next input still evaluates, after the error report.
    CHECK(got.find("2\n", err) != std::string::npos);
  }

  TEST_CASE("nested prompts carry the interpretation depth") {
    std::string got = replTranscript(testutil::kTwiceByName,
                                     {testutil::kStepInput});
    CHECK(got.find(". 1> ") == 0);
  }

  TEST_CASE("rule text matches the frozen rendering") {
    struct Case {
      const char* program;
      const char* name;
      const char* text;
      const char* tex;
    };
    for (const Case& c : {
             Case{testutil::kDefR, "r", "rule_r.txt", "rule_r.tex"},
             Case{testutil::kTwiceByName, "twice", "rule_twice_cbn.txt",
                  "rule_twice_cbn.tex"},
             Case{testutil::kTwiceByValue, "twice", "rule_twice_cbv.txt",
                  "rule_twice_cbv.tex"},
         }) {
      Session s;
      s.load(c.program);
      std::string text = readGolden(c.text);
      std::string tex = readGolden(c.tex);
      REQUIRE(!text.empty());
      REQUIRE(!tex.empty());
      CHECK_MESSAGE(s.defruleText(c.name, false) == text, c.text);
      CHECK_MESSAGE(s.defruleText(c.name, true) == tex, c.tex);
    }
  }

  TEST_CASE("rules for built-in operations need no definitions") {
    Session s;
    std::string out = s.defruleText("induction", false);
    CHECK(out.find("induction") != std::string::npos);
    CHECK(out.find("⊣") != std::string::npos);
    CHECK_THROWS_AS(s.defruleText("nosuch", false), Error);
  }

  TEST_CASE("specialization output matches the frozen trace") {
    Session s;
    s.load(testutil::kTwiceByName);
    std::string want = readGolden("specialize_twice_cbn.txt");
    REQUIRE(!want.empty());
    CHECK(s.specializeText("twice", "f{2}") == want);
    CHECK(s.specializeText("twice", "f{c}").find("((c·c)·(c·c))") !=
          std::string::npos);
  }

  TEST_CASE("checking reports the program type or the full dump") {
    Session s;
    CHECK(s.check("1+2", false) == "int");
    std::string dump = s.check(testutil::kDefR, true);
    CHECK(dump.find("r") != std::string::npos);
    CHECK(dump.find("int") != std::string::npos);
  }

  TEST_CASE("run returns the program value and honors the fuel budget") {
    Session s;
    s.setWriter([](const std::string&) {});
    CHECK(renderValue(s.runSource(testutil::kDefR)) == "36");
    Session tiny;
    tiny.setWriter([](const std::string&) {});
    tiny.setFuel(10);
    CHECK_THROWS_AS(tiny.runSource(testutil::kDefR), Error);
  }
}
