#include "ast.hpp"

namespace howard {

namespace {
std::shared_ptr<Expr> blank(Expr::Kind k, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->pos = pos;
  return e;
}
}  // namespace

ExprPtr mkSeq(std::vector<ExprPtr> items, bool braced, SourcePos pos) {
  auto e = blank(Expr::Kind::Seq, pos);
  e->items = std::move(items);
  e->braced = braced;
  return e;
}

ExprPtr mkApply(std::string op, std::vector<Arg> args, SourcePos pos,
                std::optional<std::string> qualifier) {
  auto e = blank(Expr::Kind::Apply, pos);
  e->op = std::move(op);
  e->args = std::move(args);
  e->qualifier = std::move(qualifier);
  return e;
}

ExprPtr mkInfix(std::string sym, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
  auto e = blank(Expr::Kind::Infix, pos);
  e->sym = std::move(sym);
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr mkInt(std::int64_t v, SourcePos pos) {
  auto e = blank(Expr::Kind::IntConst, pos);
  e->intValue = v;
  return e;
}

ExprPtr mkStr(std::string v, SourcePos pos) {
  auto e = blank(Expr::Kind::StrConst, pos);
  e->strValue = std::move(v);
  return e;
}

ExprPtr mkDef(SigPtr sig, ExprPtr defBody, ExprPtr appBody, SourcePos pos) {
  auto e = blank(Expr::Kind::Def, pos);
  e->sig = std::move(sig);
  e->defBody = std::move(defBody);
  e->appBody = std::move(appBody);
  return e;
}

Arg bracedArg(ExprPtr body, std::optional<std::string> label) {
  Arg a;
  a.label = std::move(label);
  a.body = std::move(body);
  return a;
}

Arg valueListArg(std::vector<ExprPtr> items, std::optional<std::string> label) {
  Arg a;
  a.label = std::move(label);
  a.isValueList = true;
  a.items = std::move(items);
  return a;
}

static bool typeExprEq(const std::optional<TypeExprAst>& a,
                       const std::optional<TypeExprAst>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

bool signatureEquals(const SigPtr& a, const SigPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->name != b->name || !(a->typeParams == b->typeParams)) return false;
  if (!typeExprEq(a->result, b->result)) return false;
  if (a->params.size() != b->params.size()) return false;
  for (size_t i = 0; i < a->params.size(); ++i) {
    const auto& pa = a->params[i];
    const auto& pb = b->params[i];
    if (pa.kind != pb.kind) return false;
    switch (pa.kind) {
      case ParamGroup::Kind::ByName:
        if (!signatureEquals(pa.byName, pb.byName)) return false;
        break;
      case ParamGroup::Kind::ByValue: {
        if (pa.byValue.size() != pb.byValue.size()) return false;
        for (size_t j = 0; j < pa.byValue.size(); ++j)
          if (!signatureEquals(pa.byValue[j], pb.byValue[j])) return false;
        break;
      }
      case ParamGroup::Kind::Operator:
        if (pa.op->symbol != pb.op->symbol ||
            !(pa.op->typeParams == pb.op->typeParams) ||
            !(pa.op->lhs == pb.op->lhs) || !(pa.op->rhs == pb.op->rhs) ||
            !(pa.op->result == pb.op->result))
          return false;
        break;
    }
  }
  return true;
}

bool exprEquals(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Seq:
    case Expr::Kind::ListLit: {
      if (a->items.size() != b->items.size()) return false;
      for (size_t i = 0; i < a->items.size(); ++i)
        if (!exprEquals(a->items[i], b->items[i])) return false;
      return true;
    }
    case Expr::Kind::Apply: {
      if (a->op != b->op || a->qualifier != b->qualifier ||
          a->pendingLabel != b->pendingLabel ||
          a->args.size() != b->args.size())
        return false;
      for (size_t i = 0; i < a->args.size(); ++i) {
        const Arg& x = a->args[i];
        const Arg& y = b->args[i];
        if (x.label != y.label || x.isValueList != y.isValueList) return false;
        if (x.isValueList) {
          if (x.items.size() != y.items.size()) return false;
          for (size_t j = 0; j < x.items.size(); ++j)
            if (!exprEquals(x.items[j], y.items[j])) return false;
        } else if (!exprEquals(x.body, y.body)) {
          return false;
        }
      }
      return true;
    }
    case Expr::Kind::Infix:
      return a->sym == b->sym && exprEquals(a->lhs, b->lhs) &&
             exprEquals(a->rhs, b->rhs);
    case Expr::Kind::IntConst:
      return a->intValue == b->intValue;
    case Expr::Kind::StrConst:
      return a->strValue == b->strValue;
    case Expr::Kind::Def:
      return signatureEquals(a->sig, b->sig) &&
             exprEquals(a->defBody, b->defBody) &&
             exprEquals(a->appBody, b->appBody);
  }
  return false;
}

}  // namespace howard
