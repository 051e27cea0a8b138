#include <cstdlib>
#include <cstring>
#include <deque>
#include <string>

#include "doctest.h"
#include "howard.h"

namespace {

const char* kDefR =
    "DEF r OF T [D[x:int]:int] [A[f[X:int]:int]:T]: T {A{D{X*2}}} "
    "{r{x*x}{f{3}}}";

struct Io {
  std::string out;
  std::deque<std::string> in;
};

void writeOut(const char* bytes, void* userdata) {
  static_cast<Io*>(userdata)->out += bytes;
}

char* readIn(void* userdata) {
  auto* io = static_cast<Io*>(userdata);
  if (io->in.empty()) return nullptr;
  std::string line = io->in.front();
  io->in.pop_front();
  char* p = static_cast<char*>(std::malloc(line.size() + 1));
  std::memcpy(p, line.c_str(), line.size() + 1);
  return p;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("run returns the rendered value") {
    howard_session* s = howard_session_new();
    REQUIRE(s);
    char* value = nullptr;
    CHECK(howard_run(s, kDefR, &value) == HOWARD_OK);
    REQUIRE(value);
    CHECK(std::string(value) == "36");
    howard_string_free(value);
    howard_session_free(s);
  }

  TEST_CASE("errors set a status and a message") {
    howard_session* s = howard_session_new();
    char* value = nullptr;
    CHECK(howard_run(s, "1/0", &value) == HOWARD_ERR_LANGUAGE);
    CHECK(value == nullptr);
    CHECK(std::string(howard_last_error(s)).find("Division") !=
          std::string::npos);
    // The message is cleared by the next successful call.
    CHECK(howard_run(s, "1+1", &value) == HOWARD_OK);
    CHECK(std::string(howard_last_error(s)).empty());
    howard_string_free(value);
    howard_session_free(s);
  }

  TEST_CASE("null arguments are usage errors") {
    howard_session* s = howard_session_new();
    CHECK(howard_run(nullptr, "1", nullptr) == HOWARD_ERR_USAGE);
    CHECK(howard_run(s, nullptr, nullptr) == HOWARD_ERR_USAGE);
    char* out = nullptr;
    CHECK(howard_check(s, "1", 0, nullptr) == HOWARD_ERR_USAGE);
    CHECK(howard_defrule(s, nullptr, 0, &out) == HOWARD_ERR_USAGE);
    howard_session_free(s);
  }

  TEST_CASE("check, defrule, and specialize") {
    howard_session* s = howard_session_new();
    char* out = nullptr;
    REQUIRE(howard_check(s, "1+2", 0, &out) == HOWARD_OK);
    CHECK(std::string(out) == "int");
    howard_string_free(out);

    REQUIRE(howard_load(s, kDefR) == HOWARD_OK);
    REQUIRE(howard_defrule(s, "r", 0, &out) == HOWARD_OK);
    CHECK(std::string(out).find("DEF r") != std::string::npos);
    howard_string_free(out);

    REQUIRE(howard_specialize(s, "r", "f{3}", &out) == HOWARD_OK);
    CHECK(std::string(out).find("36") != std::string::npos);
    howard_string_free(out);
    howard_session_free(s);
  }

  TEST_CASE("fuel budget propagates") {
    howard_session* s = howard_session_new();
    howard_session_set_fuel(s, 10);
    char* value = nullptr;
    CHECK(howard_run(s, kDefR, &value) == HOWARD_ERR_LANGUAGE);
    CHECK(std::string(howard_last_error(s)).find("Fuel") != std::string::npos);
    howard_session_free(s);
  }

  TEST_CASE("interactive loop over callbacks") {
    howard_session* s = howard_session_new();
    Io io;
    io.in = {"1+1", "DEF f [X:int]:int { X*3 };", "f{7};"};
    howard_session_set_writer(s, writeOut, &io);
    howard_session_set_reader(s, readIn, &io);
    CHECK(howard_repl(s, nullptr) == HOWARD_OK);
    CHECK(io.out.find("2") != std::string::npos);
    CHECK(io.out.find("21") != std::string::npos);
    howard_session_free(s);
  }
}
