#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "eval.hpp"
#include "specialize.hpp"
#include "stdlib.hpp"

namespace howard {

// A self-contained interpreter session: the stdlib environments, the store,
// the registry of definitions seen, and the I/O hooks. One session per
// logical execution context; sessions are independent.
class Session {
 public:
  using Reader = std::function<std::optional<std::string>()>;
  using Writer = std::function<void(const std::string&)>;

  Session();

  void setFuel(long long fuel) { fuel_ = fuel; }
  void setSeed(unsigned seed) { seed_ = seed; }
  void setReader(Reader r) { reader_ = std::move(r); }
  void setWriter(Writer w) { writer_ = std::move(w); }

  // parse → desugar → typecheck; registers DEFs for defrule/specialize.
  ExprPtr compile(const std::string& source);

  // Registers a source's definitions without evaluating it.
  void load(const std::string& source);

  // Full pipeline plus evaluation. Program output goes to the writer;
  // INTERPRET reads from the reader. Returns the program value.
  RtPtr runSource(const std::string& source);

  // Typechecks only; returns the --dump-types lines (one per application)
  // when wanted, otherwise the resulting type.
  std::string check(const std::string& source, bool dumpTypes);

  // Rule text for a known operation's signature (DEF-scheme; the
  // call-by-value variant when the signature has by-value parameters).
  std::string defruleText(const std::string& name, bool latex);

  // Specialisation trace and final rule; with a call expression, also the
  // terminal mathematical expression of applying the rule to it.
  std::string specializeText(const std::string& name,
                             const std::string& callExpr);

  // Interactive loop; optionally evaluates a startup source first (whose
  // INTERPRET occurrences prompt at nesting depth 1).
  void repl(const std::string& startupSource);

 private:
  struct DefRecord {
    SigPtr sig;
    ExprPtr defBody;        // desugared
    const Expr* applySite;  // first application of the name, if any
    ExprPtr root;           // keeps the tree (and applySite) alive
  };

  void registerDefs(const ExprPtr& core);
  void registerDefsIn(const ExprPtr& e, const ExprPtr& root);
  std::optional<std::string> readUnit(int depth);
  std::optional<RtPtr> interpretHook(const Expr& site, const RtEnv& env);
  std::string promptFor(int depth, int n) const;

  Stdlib lib_;
  Store store_;
  std::map<std::string, DefRecord> defs_;
  std::string defPrefix_;  // accumulated pure-definition REPL inputs
  std::vector<int> lineCounters_;
  int depth_ = 0;
  long long fuel_ = 10000000;
  unsigned seed_ = 0;
  Reader reader_;
  Writer writer_;
};

}  // namespace howard
