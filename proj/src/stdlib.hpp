#pragma once

#include "desugar.hpp"
#include "eval.hpp"
#include "rules.hpp"
#include "typeinfer.hpp"

namespace howard {

// The predefined operations, registered consistently across the three
// front-end environments.
struct Stdlib {
  SigEnv sigs;
  TEnv types;
  RtEnv runtime;
};

Stdlib makeStdlib();

// The application rule for `induction`: conclusion over an application of
// the operation, with the recursive `result` reference as presumption
// (the induction hypothesis).
RulePtr inductionRule();

// Signature of one predefined operation, by name (null if unknown).
SigPtr stdlibSignature(const std::string& name);

}  // namespace howard
