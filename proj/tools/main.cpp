#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "howard.h"

namespace {

int exitCode(howard_status st) {
  switch (st) {
    case HOWARD_OK:
      return 0;
    case HOWARD_ERR_USAGE:
      return 2;
    default:
      return 1;
  }
}

int fail(howard_session* s, howard_status st) {
  const char* msg = howard_last_error(s);
  if (msg && *msg) std::cerr << msg << "\n";
  return exitCode(st);
}

bool readFile(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

void writeStdout(const char* bytes, void*) {
  std::fwrite(bytes, 1, std::strlen(bytes), stdout);
  std::fflush(stdout);
}

char* readStdinLine(void*) {
  std::string line;
  if (!std::getline(std::cin, line)) return nullptr;
  char* p = static_cast<char*>(std::malloc(line.size() + 1));
  std::memcpy(p, line.c_str(), line.size() + 1);
  return p;
}

// Loads each --load file's definitions into the session.
int loadAll(howard_session* s, const std::vector<std::string>& paths,
            howard_status& st) {
  for (const auto& path : paths) {
    std::string src;
    if (!readFile(path, src)) {
      std::cerr << "cannot read file: " << path << "\n";
      st = HOWARD_ERR_USAGE;
      return 2;
    }
    st = howard_load(s, src.c_str());
    if (st != HOWARD_OK) return fail(s, st);
  }
  st = HOWARD_OK;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpreter and rule toolkit for Howard languages"};
  app.require_subcommand(1);

  long long fuel = -1;
  unsigned seed = 0;
  bool seedSet = false;
  app.add_option("--fuel", fuel,
                 "evaluation step budget (or HOWARD_FUEL env var)");
  app.add_option("--seed", seed, "fresh-name counter seed for rules")
      ->each([&](const std::string&) { seedSet = true; });

  std::string runFile, checkFile, name, callExpr;
  std::vector<std::string> loads;
  bool latex = false, dumpTypes = false;

  auto* cmdRun = app.add_subcommand("run", "evaluate a program file");
  cmdRun->add_option("file", runFile, "program file")->required();

  auto* cmdRepl = app.add_subcommand("repl", "interactive session");
  cmdRepl->add_option("--load", loads, "evaluate file(s) at startup");

  auto* cmdDefrule =
      app.add_subcommand("defrule", "print an operation's inference rule");
  cmdDefrule->add_option("name", name, "operation name")->required();
  cmdDefrule->add_flag("--latex", latex, "LaTeX output");
  cmdDefrule->add_option("--load", loads, "file(s) with definitions");

  auto* cmdSpec = app.add_subcommand(
      "specialize", "specialize a definition's rule against its body");
  cmdSpec->add_option("name", name, "definition name")->required();
  cmdSpec->add_option("--call", callExpr,
                      "also reduce this call with the final rule");
  cmdSpec->add_option("--load", loads, "file(s) with definitions");

  auto* cmdCheck = app.add_subcommand("check", "typecheck a program file");
  cmdCheck->add_option("file", checkFile, "program file")->required();
  cmdCheck->add_flag("--dump-types", dumpTypes,
                     "one line per application with solved types");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  howard_session* s = howard_session_new();
  if (!s) {
    std::cerr << "out of memory\n";
    return 1;
  }

  if (fuel < 0) {
    if (const char* env = std::getenv("HOWARD_FUEL")) fuel = std::atoll(env);
  }
  if (fuel > 0) howard_session_set_fuel(s, fuel);
  if (seedSet) howard_session_set_seed(s, seed);
  howard_session_set_writer(s, writeStdout, nullptr);
  howard_session_set_reader(s, readStdinLine, nullptr);

  howard_status st = HOWARD_OK;
  int rc = 0;

  if (*cmdRun) {
    std::string src;
    if (!readFile(runFile, src)) {
      std::cerr << "cannot read file: " << runFile << "\n";
      rc = 2;
    } else {
      char* value = nullptr;
      st = howard_run(s, src.c_str(), &value);
      if (st != HOWARD_OK) {
        rc = fail(s, st);
      } else {
        if (value && *value) std::cout << value << "\n";
        howard_string_free(value);
      }
    }
  } else if (*cmdRepl) {
    std::string startup;
    for (const auto& path : loads) {
      std::string src;
      if (!readFile(path, src)) {
        std::cerr << "cannot read file: " << path << "\n";
        howard_session_free(s);
        return 2;
      }
      startup += src;
      startup += "\n";
    }
    st = howard_repl(s, startup.empty() ? nullptr : startup.c_str());
    if (st != HOWARD_OK) rc = fail(s, st);
  } else if (*cmdDefrule || *cmdSpec) {
    rc = loadAll(s, loads, st);
    if (rc == 0) {
      char* out = nullptr;
      st = *cmdDefrule
               ? howard_defrule(s, name.c_str(), latex ? 1 : 0, &out)
               : howard_specialize(s, name.c_str(),
                                   callExpr.empty() ? nullptr
                                                    : callExpr.c_str(),
                                   &out);
      if (st != HOWARD_OK) {
        rc = fail(s, st);
      } else {
        if (out && *out) std::cout << out << "\n";
        howard_string_free(out);
      }
    }
  } else if (*cmdCheck) {
    std::string src;
    if (!readFile(checkFile, src)) {
      std::cerr << "cannot read file: " << checkFile << "\n";
      rc = 2;
    } else {
      char* out = nullptr;
      st = howard_check(s, src.c_str(), dumpTypes ? 1 : 0, &out);
      if (st != HOWARD_OK) {
        rc = fail(s, st);
      } else {
        if (out && *out) std::cout << out << "\n";
        howard_string_free(out);
      }
    }
  }

  howard_session_free(s);
  return rc;
}
