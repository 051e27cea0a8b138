#pragma once

#include <memory>
#include <string>

#include "ast.hpp"

namespace howard {

struct LabelInfo {
  bool hasDefault = false;  // nested level introduces a `__` member
  bool hasRval = false;     // nested level introduces a `_` member
  SigPtr paramSig;
};

// Persistent map from operation names (and "label.member" qualified names)
// to signatures, plus level-label info for syntactic coercion.
class SigEnv {
 public:
  SigEnv bind(const std::string& name, SigPtr sig) const;
  SigEnv bindLabel(const std::string& label, LabelInfo info) const;
  const SignatureSpec* lookup(const std::string& name) const;
  SigPtr lookupPtr(const std::string& name) const;
  const LabelInfo* lookupLabel(const std::string& label) const;

  // Binds a parameter's implicit names (its immediate sub-parameters),
  // optionally qualified by a level label.
  SigEnv bindMembers(const SignatureSpec& param,
                     const std::string* label) const;

 private:
  struct Node {
    std::string key;
    SigPtr sig;
    LabelInfo label;
    bool isLabel = false;
    std::shared_ptr<const Node> parent;
  };
  std::shared_ptr<const Node> head_;
};

// Scope snapshot attached to INTERPRET occurrences.
struct ScopeNote {
  SigEnv env;
};

// Applies the convenience rules (identity, declaration, syntactic coercion,
// list expressions), resolves arities against signatures, and normalizes
// argument slots to the signature's parameter groups.
ExprPtr desugar(const ExprPtr& raw, const SigEnv& env);

// Desugars a whole program unit: the top-level expression list becomes the
// argument of a `program` application.
ExprPtr desugarProgram(const ExprPtr& rawSeq, const SigEnv& env);

}  // namespace howard
