#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diag.hpp"

namespace howard {

// ---------------------------------------------------------------------------
// Signatures
// ---------------------------------------------------------------------------

// Postfix type application chain, innermost first: `string Array` is
// {"string", "Array"} with Array as the outermost operator.
struct TypeExprAst {
  std::vector<std::string> chain;

  bool operator==(const TypeExprAst& o) const { return chain == o.chain; }
};

struct TypeParam {
  int arity = 0;  // 0 when no numeral given
  std::string name;

  bool operator==(const TypeParam& o) const {
    return arity == o.arity && name == o.name;
  }
};

struct SignatureSpec;
using SigPtr = std::shared_ptr<const SignatureSpec>;

// Operator parameter: symbol with two operand types and a result type.
struct OperatorSpec {
  std::string symbol;
  std::vector<TypeParam> typeParams;
  TypeExprAst lhs;
  TypeExprAst rhs;
  TypeExprAst result;
};

struct ParamGroup {
  enum class Kind { ByName, ByValue, Operator };
  Kind kind;
  // ByName: one nested signature (the parameter and its implicit names).
  SigPtr byName;
  // ByValue: the entries of one parenthesized value list; each entry is a
  // signature with a mandatory result type.
  std::vector<SigPtr> byValue;
  // Operator: symbol + operand/result types.
  std::shared_ptr<const OperatorSpec> op;
};

struct SignatureSpec {
  std::string name;
  std::vector<TypeParam> typeParams;
  std::vector<ParamGroup> params;
  std::optional<TypeExprAst> result;
  SourcePos pos;

  // Number of argument slots an application must fill: one per by-name
  // group, one per by-value entry. Operator params are implicit.
  int aritySlots() const {
    int n = 0;
    for (const auto& g : params) {
      if (g.kind == ParamGroup::Kind::ByName)
        n += 1;
      else if (g.kind == ParamGroup::Kind::ByValue)
        n += static_cast<int>(g.byValue.size());
    }
    return n;
  }
};

// ---------------------------------------------------------------------------
// Expressions (raw after parsing, core after desugaring)
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Arg {
  std::optional<std::string> label;  // LevelName, if given
  // Braced argument: body is a Seq. Value list: the item expressions.
  bool isValueList = false;
  ExprPtr body;                      // braced form
  std::vector<ExprPtr> items;        // value-list form
};

struct Expr {
  enum class Kind {
    Seq,       // items; `braced` when written with explicit { }
    Apply,     // op + optional qualifier + args (+ pendingLabel pre-desugar)
    Infix,     // sym, lhs, rhs
    IntConst,
    StrConst,
    ListLit,   // raw only; desugars to ::-chain
    Def,       // sig, defBody, appBody (appBody may be null pre-desugar)
  };

  Kind kind;
  SourcePos pos;

  // Seq / ListLit
  std::vector<ExprPtr> items;
  bool braced = false;

  // Apply
  std::string op;
  std::optional<std::string> qualifier;
  std::vector<Arg> args;
  std::optional<std::string> pendingLabel;  // declaration-style trailing label

  // Infix
  std::string sym;
  ExprPtr lhs, rhs;

  // Constants
  std::int64_t intValue = 0;
  std::string strValue;

  // Def
  SigPtr sig;
  ExprPtr defBody;
  ExprPtr appBody;

  // Annotations filled by later passes (INTERPRET scope snapshots).
  mutable std::shared_ptr<void> scopeNote;
  mutable std::shared_ptr<void> typeNote;
};

ExprPtr mkSeq(std::vector<ExprPtr> items, bool braced, SourcePos pos = {});
ExprPtr mkApply(std::string op, std::vector<Arg> args, SourcePos pos = {},
                std::optional<std::string> qualifier = std::nullopt);
ExprPtr mkInfix(std::string sym, ExprPtr lhs, ExprPtr rhs, SourcePos pos = {});
ExprPtr mkInt(std::int64_t v, SourcePos pos = {});
ExprPtr mkStr(std::string v, SourcePos pos = {});
ExprPtr mkDef(SigPtr sig, ExprPtr defBody, ExprPtr appBody, SourcePos pos = {});

Arg bracedArg(ExprPtr body, std::optional<std::string> label = std::nullopt);
Arg valueListArg(std::vector<ExprPtr> items,
                 std::optional<std::string> label = std::nullopt);

// Structural equality, ignoring positions and annotations.
bool exprEquals(const ExprPtr& a, const ExprPtr& b);
bool signatureEquals(const SigPtr& a, const SigPtr& b);

}  // namespace howard
