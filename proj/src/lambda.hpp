#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "ast.hpp"
#include "desugar.hpp"

namespace howard {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Lam, App, Num, Str, Op };
  Kind kind;
  std::string name;  // Var, Lam binder
  TermPtr a, b;      // Lam body (a); App fun/arg; Op lhs/rhs
  std::string sym;   // Op
  std::int64_t num = 0;
  std::string str;
};

TermPtr mkVar(std::string n);
TermPtr mkLam(std::string n, TermPtr body);
TermPtr mkApp(TermPtr f, TermPtr a);
TermPtr mkNum(std::int64_t v);
TermPtr mkStrT(std::string v);
TermPtr mkOp(std::string sym, TermPtr l, TermPtr r);

// Hands out names that are globally distinct within one translation.
class NameSupply {
 public:
  std::string fresh(const std::string& base);

 private:
  std::map<std::string, int> used_;
};

// Translates a desugared expression of the pure by-name fragment into a
// lambda term: each braced argument becomes one abstraction per implicit
// name of the corresponding parameter, and a definition becomes an
// application of the continuation to the abstracted defining body.
// By-value parameters and effectful operations are rejected.
TermPtr translate(const ExprPtr& core, const SigEnv& env, NameSupply& ns);

// Leftmost-outermost reduction to normal form, folding arithmetic on
// literal operands. Throws when out of fuel.
TermPtr normalize(const TermPtr& t, long fuel = 100000);

bool alphaEq(const TermPtr& a, const TermPtr& b);
std::string dumpTerm(const TermPtr& t);

// Capture-avoiding substitution t[v/x] and the free variables of a term
// (exposed for the normalizer's randomized checks).
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& v);
std::set<std::string> freeTermVars(const TermPtr& t);

}  // namespace howard
