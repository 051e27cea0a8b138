#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ast.hpp"
#include "rules.hpp"

namespace howard {

struct SpecializationTrace {
  struct Entry {
    std::string caption;
    RulePtr rule;
  };
  std::vector<Entry> entries;
};

// Projects the DEF-scheme of `sig` onto the concrete defining body: the
// scheme's application rule is instantiated with the body, its meaning chain
// reduced symbolically, and every presumption instance spawned on the way is
// recursively reduced the same way, until no defining-context reference
// remains. Errors: NonEliminable (recursive definitions, or a surviving
// defining-context fragment), Stuck (effectful body without rules).
std::pair<RulePtr, SpecializationTrace> specialize(const SigPtr& sig,
                                                   const ExprPtr& defBody,
                                                   unsigned seed = 0);

// Reduces a concrete application under a rule (plus its presumptions) to a
// terminal mathematical expression, possibly symbolic.
MathPtr reduce_application(const RulePtr& r, const ExprPtr& call,
                           const ReduceOptions& opts = {});

// True when any defining-context metavariable survives in the rule.
bool mentionsDefiningContext(const RulePtr& r);

}  // namespace howard
