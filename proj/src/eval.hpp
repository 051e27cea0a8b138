#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ast.hpp"

namespace howard {

struct RtValue;
using RtPtr = std::shared_ptr<const RtValue>;

struct Callable;
using CallablePtr = std::shared_ptr<const Callable>;

// Persistent runtime environment: operation names (and "label.member"
// qualified names) bound to callables.
class RtEnv {
 public:
  RtEnv bind(const std::string& name, CallablePtr c) const;
  CallablePtr lookup(const std::string& name) const;

 private:
  struct Node {
    std::string key;
    CallablePtr value;
    std::shared_ptr<const Node> parent;
  };
  std::shared_ptr<const Node> head_;
};

struct RtValue {
  enum class Kind { Int, Str, Bool, Unit, List, Operation, Cell, Port };
  Kind kind = Kind::Unit;
  std::int64_t i = 0;
  std::string s;
  bool b = false;
  std::vector<RtPtr> list;
  CallablePtr op;      // Operation
  int cell = -1;       // Cell (store index)
  bool isOutput = true;  // Port direction
};

RtPtr rtInt(std::int64_t v);
RtPtr rtStr(std::string v);
RtPtr rtBool(bool v);
RtPtr rtUnit();
RtPtr rtList(std::vector<RtPtr> items);
std::string renderValue(const RtPtr& v);
bool valueEquals(const RtPtr& a, const RtPtr& b);

struct Store;

// One operation in scope: an in-language definition, an argument closure,
// or an intrinsic dispatched by id.
struct Callable {
  enum class Impl { Defined, ByNameArg, Memo, Intrinsic };
  Impl impl = Impl::Defined;
  SigPtr sig;
  ExprPtr body;   // Defined: definition body; ByNameArg: the argument Seq
  RtEnv env;      // closure environment
  RtPtr memo;     // Memo: the evaluated value
  std::optional<std::string> label;  // ByNameArg: level label, if any
  // Intrinsic: handler receives the call site's argument list and the
  // caller's environment, evaluating arguments as its semantics dictate.
  std::function<RtPtr(const Expr& site, const RtEnv& callerEnv, Store& st)>
      intrinsic;
};

// Signals end-of-input from INTERPRET; unwinds to the nearest `loop`.
struct EofSignal {};

struct Store {
  std::vector<std::optional<RtPtr>> cells;
  std::vector<std::string> effects;  // "PRINT <bytes>" / "ASSIGN <cell> <v>"
  std::function<void(const std::string&)> sink;  // receives printed bytes
  // Bridge for INTERPRET: reads and runs one input in the given scope.
  // Returns the value, or nullopt on end of input.
  std::function<std::optional<RtPtr>(const Expr& site, const RtEnv& env)>
      interpret;
  long long fuel = 10000000;

  void print(const std::string& bytes);
  void assign(int cell, const RtPtr& v);
  void burn(SourcePos pos);
};

RtPtr eval(const ExprPtr& e, const RtEnv& env, Store& st);

// Invokes a bound operation with the argument list of a call site.
RtPtr call(const CallablePtr& c, const Expr& site, const RtEnv& callerEnv,
           Store& st);

// Calls a by-name parameter closure programmatically with pre-built member
// bindings (used by intrinsics: var, induction, sort, ...).
RtPtr invokeClosure(const CallablePtr& c,
                    const std::vector<std::pair<std::string, CallablePtr>>&
                        memberBindings,
                    Store& st);

CallablePtr memoCallable(SigPtr sig, RtPtr value);
CallablePtr intrinsicCallable(
    SigPtr sig,
    std::function<RtPtr(const Expr&, const RtEnv&, Store&)> fn);
CallablePtr definedCallable(SigPtr sig, ExprPtr body, RtEnv env);

}  // namespace howard
