#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ast.hpp"

namespace howard {

struct TypeValue;
using TypePtr = std::shared_ptr<const TypeValue>;

struct TypeValue {
  enum class Kind { Ground, Applied, Var, Nominal };
  Kind kind;
  std::string name;  // Ground name, Applied operator, Var/Nominal label
  TypePtr arg;       // Applied: the operand (postfix `arg name`)
  int id = 0;        // Var / Nominal identity
};

TypePtr tGround(std::string name);
TypePtr tApplied(TypePtr arg, std::string op);
std::string renderType(const TypePtr& t);

// Persistent typing environment: operation names bound to their signature
// plus the type-parameter instantiation fixed where the name was introduced;
// operator symbols bound likewise.
class TEnv {
 public:
  using TypeVars = std::map<std::string, TypePtr>;
  struct Entry {
    SigPtr sig;
    TypeVars vars;
  };
  struct OpEntry {
    std::shared_ptr<const OperatorSpec> op;
    TypeVars vars;
  };

  TEnv bind(const std::string& name, SigPtr sig, TypeVars vars = {}) const;
  TEnv bindOp(std::shared_ptr<const OperatorSpec> op,
              TypeVars vars = {}) const;
  const Entry* lookup(const std::string& name) const;
  std::vector<const OpEntry*> lookupOps(const std::string& symbol) const;

 private:
  struct Node {
    std::string key;
    Entry entry;
    OpEntry op;
    bool isOp = false;
    std::shared_ptr<const Node> parent;
  };
  std::shared_ptr<const Node> head_;
};

struct InferResult {
  TypePtr type;
  // one line per application: position, head, solved type parameters
  std::vector<std::string> dump;
};

// Checks a desugared expression, solving each application's type parameters
// by unification. Member types declared with OF on parameter levels are
// generative: fresh per application and unifiable only with themselves.
InferResult infer(const ExprPtr& core, const TEnv& env, bool wantDump = false);

}  // namespace howard
