#pragma once

#include <string>

#include "ast.hpp"

namespace howard {

// Round-trippable source forms: parse(print(x)) is structurally equal to x.
std::string printExpr(const ExprPtr& e);
std::string printSignature(const SigPtr& s);

// Stable structural dump (one node per line, 2-space indent) for goldens.
std::string dumpExpr(const ExprPtr& e);

}  // namespace howard
