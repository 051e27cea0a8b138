#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ast.hpp"

namespace howard {

// ---------------------------------------------------------------------------
// Mathematical expressions (the right-hand side language of rules)
// ---------------------------------------------------------------------------

struct MathExpr;
using MathPtr = std::shared_ptr<const MathExpr>;

struct MathExpr {
  enum class Kind { Num, Sym, BinOp, Hole };
  Kind kind;
  std::int64_t num = 0;
  std::string name;  // Sym: program-level name; Hole: chain variable
  std::string sym;   // BinOp operator (program spelling, e.g. "*")
  MathPtr lhs, rhs;
};

MathPtr mNum(std::int64_t v);
MathPtr mSym(std::string n);
MathPtr mHole(std::string n);
MathPtr mBin(std::string sym, MathPtr l, MathPtr r);

bool mathEquals(const MathPtr& a, const MathPtr& b);
// Replaces both Hole(x) and Sym(x) by m.
MathPtr mathSubst(const MathPtr& in, const std::string& x, const MathPtr& m);
bool mathMentions(const MathPtr& in, const std::string& x);
// Constant-folds closed BinOps; no algebraic identities.
MathPtr mathFold(const MathPtr& in);
std::string renderMath(const MathPtr& m);

// ---------------------------------------------------------------------------
// Fragments, chains, rules
// ---------------------------------------------------------------------------

// A program operand of a rule: either a context metavariable D<f>/E<f> or a
// concrete expression.
struct Fragment {
  enum class Kind { Unknown, Concrete };
  Kind kind;
  char ctx = 'E';     // 'D' defining context, 'E' application context
  std::string owner;  // the name the metavariable ranges over
  ExprPtr expr;       // Concrete
};

Fragment unknownFrag(char ctx, std::string owner);
Fragment concreteFrag(ExprPtr e);
bool fragmentEquals(const Fragment& a, const Fragment& b);

struct Rule;
using RulePtr = std::shared_ptr<const Rule>;

// Persistent set of rules in scope; newest first.
struct RuleEnvNode;
using RuleEnv = std::shared_ptr<const RuleEnvNode>;
struct RuleEnvNode {
  RulePtr rule;
  RuleEnv parent;
};
RuleEnv envPush(RuleEnv env, RulePtr r);

// One element of a transformer chain: T_var<program> or [replacement/var].
struct ChainStep {
  enum class Kind { Bind, Subst };
  Kind kind;
  std::string var;  // Bind: bound chain variable; Subst: substituted name
  Fragment frag;    // Bind
  MathPtr repl;     // Subst
  RuleEnv env;      // rules in scope at this step (empty in rule templates)
};

ChainStep bindStep(std::string var, Fragment f, RuleEnv env = nullptr);
ChainStep substStep(std::string var, MathPtr m);

struct Chain {
  std::vector<ChainStep> steps;
  MathPtr terminal;
};

struct Rule {
  std::string head;                // operation name ("DEF" for the scheme)
  std::vector<Fragment> argPats;   // one per argument slot
  std::string resultVar;           // conventionally "θ"
  std::vector<ChainStep> meaning;  // the conclusion's transformer chain
  std::vector<RulePtr> presumptions;
  bool memo = false;  // rendered as "..." (already displayed)
};

bool ruleEquals(const RulePtr& a, const RulePtr& b);

// ---------------------------------------------------------------------------
// DEF-scheme generation
// ---------------------------------------------------------------------------

// The application rule for one parameter level: conclusion
// name{outer<slot1>}... -> T_θ<inner<name>>, presumptions with contexts
// swapped; a by-value slot contributes a fresh-η bind plus a substitution
// instead of a presumption.
RulePtr defmac(const SigPtr& sig, char inner, char outer);

// The scheme for `DEF sig {D<f>}{E<f>}`: meaning T_θ<E<f>>, one presumption
// per the one-step expansion (the application rule for f).
RulePtr defscheme(const SigPtr& sig);
// Same generator; requires at least one by-value parameter somewhere.
RulePtr defscheme_cbv(const SigPtr& sig);

// Substitution of concrete fragments for context metavariables, applied
// throughout conclusion, meaning, and presumptions.
struct UnknownKey {
  char ctx;
  std::string owner;
  bool operator<(const UnknownKey& o) const {
    return ctx != o.ctx ? ctx < o.ctx : owner < o.owner;
  }
};
using Bindings = std::map<UnknownKey, Fragment>;
RulePtr instantiate(const RulePtr& r, const Bindings& b);

// ---------------------------------------------------------------------------
// Chain reduction
// ---------------------------------------------------------------------------

class FreshNames {
 public:
  explicit FreshNames(unsigned seed = 0) : seed_(seed) {}
  std::string fresh(const std::string& family);
  // Raises the family counter past an existing name (e.g. "η2"), so fresh
  // names never collide with variables already present in a chain.
  void reserve(const std::string& name);

 private:
  std::map<std::string, unsigned> counters_;
  unsigned seed_;  // starting counter value, for reseeding tests
};

struct ReduceOptions {
  long fuel = 100000;
  std::vector<std::string>* trace = nullptr;
  unsigned seed = 0;
  bool fold = true;  // constant-fold the terminal
};

// One rewrite of the leftmost reducible Bind (axiom or rule from the step's
// environment). Returns false when no Bind with a concrete program remains.
bool step(Chain& c, FreshNames& fresh);

// Iterates step, then folds substitutions right-to-left into the terminal
// and constant-folds. Errors: Stuck, AnnihilateViolation, FuelExhausted.
MathPtr reduceChain(Chain c, const ReduceOptions& opts = {});

// Convenience: reduce T_θ<core> · θ under env.
MathPtr reduceProgram(const ExprPtr& core, RuleEnv env,
                      const ReduceOptions& opts = {});

// Folds a fully reduced chain (no concrete Binds left) into its terminal.
MathPtr foldChain(const Chain& c, bool fold = true);

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string renderFragment(const Fragment& f);
std::string renderStep(const ChainStep& s);
std::string renderChainLine(const Chain& c);
std::string renderConclusion(const Rule& r);

enum class RuleFormat { Text, Latex };
std::string render(const RulePtr& r, RuleFormat fmt);

}  // namespace howard
