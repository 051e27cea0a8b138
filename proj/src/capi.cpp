#include "howard.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "diag.hpp"
#include "session.hpp"

struct howard_session {
  howard::Session impl;
  std::string lastError;
};

namespace {

char* dupString(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs `body` and maps exceptions to statuses + lastError.
template <typename F>
howard_status guarded(howard_session* s, F&& body) {
  if (!s) return HOWARD_ERR_USAGE;
  s->lastError.clear();
  try {
    body();
    return HOWARD_OK;
  } catch (const std::exception& e) {
    s->lastError = e.what();
    return HOWARD_ERR_LANGUAGE;
  }
}

}  // namespace

extern "C" {

howard_session* howard_session_new(void) {
  try {
    return new howard_session();
  } catch (...) {
    return nullptr;
  }
}

void howard_session_free(howard_session* s) { delete s; }

void howard_session_set_fuel(howard_session* s, long long fuel) {
  if (s) s->impl.setFuel(fuel);
}

void howard_session_set_seed(howard_session* s, unsigned seed) {
  if (s) s->impl.setSeed(seed);
}

void howard_session_set_writer(howard_session* s, howard_write_fn fn,
                               void* userdata) {
  if (!s) return;
  if (!fn) {
    s->impl.setWriter({});
    return;
  }
  s->impl.setWriter(
      [fn, userdata](const std::string& bytes) { fn(bytes.c_str(), userdata); });
}

void howard_session_set_reader(howard_session* s, howard_read_fn fn,
                               void* userdata) {
  if (!s) return;
  if (!fn) {
    s->impl.setReader({});
    return;
  }
  s->impl.setReader([fn, userdata]() -> std::optional<std::string> {
    char* line = fn(userdata);
    if (!line) return std::nullopt;
    std::string out(line);
    std::free(line);
    return out;
  });
}

howard_status howard_load(howard_session* s, const char* source) {
  if (!source) return HOWARD_ERR_USAGE;
  return guarded(s, [&] { s->impl.load(source); });
}

howard_status howard_run(howard_session* s, const char* source,
                         char** value_out) {
  if (!source) return HOWARD_ERR_USAGE;
  if (value_out) *value_out = nullptr;
  return guarded(s, [&] {
    howard::RtPtr v = s->impl.runSource(source);
    if (value_out) *value_out = dupString(howard::renderValue(v));
  });
}

howard_status howard_check(howard_session* s, const char* source,
                           int dump_types, char** out) {
  if (!source || !out) return HOWARD_ERR_USAGE;
  *out = nullptr;
  return guarded(
      s, [&] { *out = dupString(s->impl.check(source, dump_types != 0)); });
}

howard_status howard_defrule(howard_session* s, const char* name, int latex,
                             char** out) {
  if (!name || !out) return HOWARD_ERR_USAGE;
  *out = nullptr;
  return guarded(
      s, [&] { *out = dupString(s->impl.defruleText(name, latex != 0)); });
}

howard_status howard_specialize(howard_session* s, const char* name,
                                const char* call_expr, char** out) {
  if (!name || !out) return HOWARD_ERR_USAGE;
  *out = nullptr;
  return guarded(s, [&] {
    *out = dupString(
        s->impl.specializeText(name, call_expr ? call_expr : std::string()));
  });
}

howard_status howard_repl(howard_session* s, const char* startup_source) {
  return guarded(s, [&] {
    s->impl.repl(startup_source ? startup_source : std::string());
  });
}

const char* howard_last_error(const howard_session* s) {
  return s ? s->lastError.c_str() : "";
}

void howard_string_free(char* p) { std::free(p); }

}  // extern "C"
