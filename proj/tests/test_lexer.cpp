#include "doctest.h"
#include "lexer.hpp"

using namespace howard;

TEST_SUITE("lexer") {
  TEST_CASE("token kinds of a small application") {
    auto toks = tokenize("r{x*x}{f{3}}");
    std::vector<Tok> kinds;
    for (const auto& t : toks) kinds.push_back(t.kind);
    CHECK(kinds == std::vector<Tok>{Tok::Name, Tok::LBrace, Tok::Name, Tok::Op,
                                    Tok::Name, Tok::RBrace, Tok::LBrace,
                                    Tok::Name, Tok::LBrace, Tok::Int,
                                    Tok::RBrace, Tok::RBrace, Tok::End});
  }

  TEST_CASE("keywords and punctuation") {
    auto toks = tokenize("DEF f OF T [x:int] : T");
    CHECK(toks[0].kind == Tok::KwDef);
    CHECK(toks[2].kind == Tok::KwOf);
    CHECK(toks[4].kind == Tok::LBrack);
    CHECK(toks[6].kind == Tok::Colon);
    CHECK(toks[8].kind == Tok::RBrack);
  }

  TEST_CASE("string literals, with and without the tilde prefix") {
    auto toks = tokenize("~\"Step \"");
    REQUIRE(toks[0].kind == Tok::Tilde);
    REQUIRE(toks[1].kind == Tok::String);
    CHECK(toks[1].text == "Step ");
    auto bare = tokenize("\"abc\"");
    REQUIRE(bare[0].kind == Tok::String);
    CHECK(bare[0].text == "abc");
  }

  TEST_CASE("multi-character operators") {
    auto toks = tokenize("a := b << c >> d :: e");
    std::vector<std::string> ops;
    for (const auto& t : toks)
      if (t.kind == Tok::Op) ops.push_back(t.text);
    CHECK(ops == std::vector<std::string>{":=", "<<", ">>", "::"});
  }

  TEST_CASE("positions are 1-based line:column") {
    auto toks = tokenize("a\n  b");
    CHECK(toks[0].pos.line == 1);
    CHECK(toks[0].pos.column == 1);
    CHECK(toks[1].pos.line == 2);
    CHECK(toks[1].pos.column == 3);
  }

  TEST_CASE("unterminated string is rejected") {
    CHECK_THROWS_AS(tokenize("~\"oops"), Error);
  }
}
