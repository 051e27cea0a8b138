#include "doctest.h"
#include "props.hpp"

TEST_SUITE("properties") {
  TEST_CASE("substitution is capture-free on random terms") {
    std::string why;
    CHECK_MESSAGE(testutil::propCaptureFreedom(10000, 42, &why), why);
  }

  TEST_CASE("argument evaluation counts follow the calling convention") {
    std::string why;
    CHECK_MESSAGE(testutil::propEffectCounts(&why), why);
  }

  TEST_CASE("evaluator, lambda normalizer, and rule derivation agree") {
    std::string why;
    CHECK_MESSAGE(testutil::propOracleTriangle(&why), why);
  }

  TEST_CASE("parse and print round-trip over the corpus and signatures") {
    std::string why;
    CHECK_MESSAGE(testutil::propRoundTrip(&why), why);
  }

  TEST_CASE("derivations keep their shape under fresh-name reseeding") {
    std::string why;
    CHECK_MESSAGE(testutil::propAlphaStability(&why), why);
  }
}
