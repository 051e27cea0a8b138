#pragma once

#include <vector>

#include "ast.hpp"
#include "lexer.hpp"

namespace howard {

// Operator precedence levels, loosest first. Returns -1 for unknown symbols.
int infixLevel(const std::string& sym);
bool infixRightAssoc(const std::string& sym);

SigPtr parseSignature(const std::vector<Token>& toks, size_t& i);
ExprPtr parseExpression(const std::vector<Token>& toks, size_t& i);

// Whole-source forms; both check that all input is consumed.
SigPtr parseSignature(const std::string& source);
ExprPtr parseExpression(const std::string& source);

// A source file / REPL unit: `;`-separated expressions (unbraced Seq).
ExprPtr parseProgram(const std::string& source);

}  // namespace howard
