#include "desugar.hpp"

#include <cassert>
#include <utility>

namespace howard {

// ---------------------------------------------------------------------------
// SigEnv
// ---------------------------------------------------------------------------

SigEnv SigEnv::bind(const std::string& name, SigPtr sig) const {
  auto n = std::make_shared<Node>();
  n->key = name;
  n->sig = std::move(sig);
  n->parent = head_;
  SigEnv out;
  out.head_ = n;
  return out;
}

SigEnv SigEnv::bindLabel(const std::string& label, LabelInfo info) const {
  auto n = std::make_shared<Node>();
  n->key = label;
  n->label = std::move(info);
  n->isLabel = true;
  n->parent = head_;
  SigEnv out;
  out.head_ = n;
  return out;
}

const SignatureSpec* SigEnv::lookup(const std::string& name) const {
  for (const Node* n = head_.get(); n; n = n->parent.get())
    if (!n->isLabel && n->key == name) return n->sig.get();
  return nullptr;
}

SigPtr SigEnv::lookupPtr(const std::string& name) const {
  for (const Node* n = head_.get(); n; n = n->parent.get())
    if (!n->isLabel && n->key == name) return n->sig;
  return nullptr;
}

const LabelInfo* SigEnv::lookupLabel(const std::string& label) const {
  for (const Node* n = head_.get(); n; n = n->parent.get())
    if (n->isLabel && n->key == label) return &n->label;
  return nullptr;
}

SigEnv SigEnv::bindMembers(const SignatureSpec& param,
                           const std::string* label) const {
  SigEnv env = *this;
  bool hasDefault = false, hasRval = false;
  auto add = [&](const SigPtr& member) {
    if (member->name == "__") hasDefault = true;
    if (member->name == "_") hasRval = true;
    env = env.bind(member->name, member);
    if (label) env = env.bind(*label + "." + member->name, member);
  };
  for (const auto& g : param.params) {
    if (g.kind == ParamGroup::Kind::ByName) {
      add(g.byName);
    } else if (g.kind == ParamGroup::Kind::ByValue) {
      for (const auto& v : g.byValue) add(v);
    }
  }
  if (label) {
    LabelInfo info;
    info.hasDefault = hasDefault;
    info.hasRval = hasRval;
    info.paramSig = std::make_shared<SignatureSpec>(param);
    env = env.bindLabel(*label, info);
  }
  return env;
}

// ---------------------------------------------------------------------------
// Desugaring
// ---------------------------------------------------------------------------

namespace {

// Syntactic position, driving the default-member coercion of bare labels:
// a label on the left of `:=` means its `__` member, a label in an operand
// or value position means `_` when the level has one.
enum class PosCtx { Normal, LValue, Operand };

struct FlatArg {
  std::optional<std::string> label;
  bool isValue = false;
  ExprPtr braced;  // Seq body when !isValue
  ExprPtr item;    // single expression when isValue
};

ExprPtr desugarExpr(const ExprPtr& e, const SigEnv& env, PosCtx ctx);
ExprPtr desugarArgBody(const ExprPtr& body, const SigEnv& env);

std::vector<FlatArg> flattenArgs(const Expr& e) {
  std::vector<FlatArg> flats;
  for (const auto& a : e.args) {
    if (a.isValueList) {
      bool first = true;
      for (const auto& it : a.items) {
        FlatArg f;
        if (first) f.label = a.label;
        first = false;
        f.isValue = true;
        f.item = it;
        flats.push_back(std::move(f));
      }
      if (a.items.empty() && a.label) {
        // `L:()` supplies nothing; keep the label as an error later.
        FlatArg f;
        f.label = a.label;
        f.isValue = true;
        flats.push_back(std::move(f));
      }
    } else {
      FlatArg f;
      f.label = a.label;
      f.braced = a.body;
      flats.push_back(std::move(f));
    }
  }
  return flats;
}

// A braced argument supplied to a value slot evaluates as a nested program.
ExprPtr bracedToValue(const ExprPtr& body) {
  if (body->kind == Expr::Kind::Seq && body->items.size() == 1)
    return body->items[0];
  return mkApply("program", {bracedArg(body)}, body->pos);
}

// A value item supplied to a by-name slot becomes a one-member body.
ExprPtr valueToBraced(const ExprPtr& item) {
  return mkSeq({item}, false, item->pos);
}

ExprPtr desugarApply(const Expr& e, const SigEnv& env, PosCtx ctx) {
  std::string op = e.op;
  std::optional<std::string> qualifier = e.qualifier;

  if (!qualifier && e.args.empty() && !env.lookup(op)) {
    if (const LabelInfo* info = env.lookupLabel(op)) {
      std::string member;
      if (ctx == PosCtx::Operand && info->hasRval)
        member = "_";
      else if (info->hasDefault)
        member = "__";
      if (!member.empty()) {
        qualifier = op;
        op = member;
      }
    }
  }

  std::string full = qualifier ? *qualifier + "." + op : op;
  SigPtr sig = env.lookupPtr(full);
  if (!sig)
    throw Error(ErrorKind::UnknownOperation, "unknown operation '" + full + "'",
                e.pos);
  if (e.pendingLabel)
    throw Error(ErrorKind::AmbiguousDeclaration,
                "declaration label '" + *e.pendingLabel +
                    "' on a saturated application of '" + full + "'",
                e.pos);

  std::vector<FlatArg> flats = flattenArgs(e);
  int needed = sig->aritySlots();
  if (static_cast<int>(flats.size()) != needed)
    throw Error(ErrorKind::ArityMismatch,
                "'" + full + "' takes " + std::to_string(needed) +
                    " argument(s), got " + std::to_string(flats.size()),
                e.pos);

  std::vector<Arg> out;
  size_t next = 0;
  for (const auto& g : sig->params) {
    if (g.kind == ParamGroup::Kind::Operator) continue;
    if (g.kind == ParamGroup::Kind::ByName) {
      FlatArg f = flats[next++];
      ExprPtr body = f.isValue ? valueToBraced(f.item) : f.braced;
      const std::string* label = f.label ? &*f.label : nullptr;
      SigEnv inner = env.bindMembers(*g.byName, label);
      Arg a = bracedArg(desugarArgBody(body, inner), f.label);
      out.push_back(std::move(a));
    } else {
      std::vector<ExprPtr> items;
      std::optional<std::string> label;
      for (size_t k = 0; k < g.byValue.size(); ++k) {
        FlatArg f = flats[next++];
        if (k == 0) label = f.label;
        ExprPtr item = f.isValue ? f.item : bracedToValue(f.braced);
        if (!item)
          throw Error(ErrorKind::ArityMismatch, "empty value argument", e.pos);
        items.push_back(desugarExpr(item, env, PosCtx::Operand));
      }
      out.push_back(valueListArg(std::move(items), label));
    }
  }

  ExprPtr result = mkApply(op, std::move(out), e.pos, qualifier);
  if (full == "INTERPRET")
    result->scopeNote = std::make_shared<ScopeNote>(ScopeNote{env});
  return result;
}

ExprPtr desugarDef(const Expr& e, const SigEnv& env) {
  if (!e.appBody)
    throw Error(ErrorKind::AmbiguousDeclaration,
                "definition of '" + e.sig->name +
                    "' has no application body and nothing follows it",
                e.pos);
  SigEnv defEnv = env.bind(e.sig->name, e.sig);
  for (const auto& g : e.sig->params) {
    if (g.kind == ParamGroup::Kind::ByName)
      defEnv = defEnv.bind(g.byName->name, g.byName);
    else if (g.kind == ParamGroup::Kind::ByValue)
      for (const auto& v : g.byValue) defEnv = defEnv.bind(v->name, v);
  }
  SigEnv appEnv = env.bind(e.sig->name, e.sig);
  ExprPtr def = desugarArgBody(e.defBody, defEnv);
  ExprPtr app = desugarArgBody(e.appBody, appEnv);
  return mkDef(e.sig, def, app, e.pos);
}

// Number of argument slots an item supplies, for the declaration rule.
int suppliedSlots(const Expr& e) {
  int n = 0;
  for (const auto& a : e.args)
    n += a.isValueList ? static_cast<int>(a.items.size()) : 1;
  return n;
}

// True when a sequence member is an application one slot short of its
// signature (a declaration whose last argument is the rest of the brace).
bool isDeclaration(const Expr& e, const SigEnv& env) {
  if (e.kind == Expr::Kind::Def) return e.appBody == nullptr;
  if (e.kind != Expr::Kind::Apply) return false;
  std::string full = e.qualifier ? *e.qualifier + "." + e.op : e.op;
  const SignatureSpec* sig = env.lookup(full);
  if (!sig) return false;
  return suppliedSlots(e) == sig->aritySlots() - 1;
}

ExprPtr desugarArgBody(const ExprPtr& body, const SigEnv& env) {
  ExprPtr seq = body;
  if (seq->kind != Expr::Kind::Seq) seq = mkSeq({seq}, false, body->pos);

  std::vector<ExprPtr> out;
  const auto& items = seq->items;
  for (size_t i = 0; i < items.size(); ++i) {
    const ExprPtr& m = items[i];
    if (isDeclaration(*m, env)) {
      if (i + 1 == items.size())
        throw Error(ErrorKind::AmbiguousDeclaration,
                    "declaration as last member of a brace has no body",
                    m->pos);
      std::vector<ExprPtr> rest(items.begin() + i + 1, items.end());
      ExprPtr restSeq = mkSeq(std::move(rest), false, items[i + 1]->pos);
      ExprPtr completed;
      if (m->kind == Expr::Kind::Def) {
        completed = mkDef(m->sig, m->defBody, restSeq, m->pos);
      } else {
        std::vector<Arg> args = m->args;
        args.push_back(bracedArg(restSeq, m->pendingLabel));
        auto c = mkApply(m->op, std::move(args), m->pos, m->qualifier);
        completed = c;
      }
      out.push_back(desugarExpr(completed, env, PosCtx::Normal));
      return mkSeq(std::move(out), false, seq->pos);
    }
    out.push_back(desugarExpr(m, env, PosCtx::Normal));
  }
  return mkSeq(std::move(out), false, seq->pos);
}

ExprPtr desugarExpr(const ExprPtr& e, const SigEnv& env, PosCtx ctx) {
  switch (e->kind) {
    case Expr::Kind::IntConst:
    case Expr::Kind::StrConst:
      return e;
    case Expr::Kind::ListLit: {
      ExprPtr acc = mkApply("nil", {}, e->pos);
      for (auto it = e->items.rbegin(); it != e->items.rend(); ++it)
        acc = mkInfix("::", *it, acc, e->pos);
      return desugarExpr(acc, env, ctx);
    }
    case Expr::Kind::Infix: {
      PosCtx lhsCtx =
          e->sym == ":=" ? PosCtx::LValue : PosCtx::Operand;
      ExprPtr l = desugarExpr(e->lhs, env, lhsCtx);
      ExprPtr r = desugarExpr(e->rhs, env, PosCtx::Operand);
      return mkInfix(e->sym, std::move(l), std::move(r), e->pos);
    }
    case Expr::Kind::Seq: {
      // A brace in expression position is a nested program.
      Expr wrapped;
      wrapped.kind = Expr::Kind::Apply;
      wrapped.pos = e->pos;
      wrapped.op = "program";
      wrapped.args = {bracedArg(e)};
      return desugarApply(wrapped, env, ctx);
    }
    case Expr::Kind::Apply:
      return desugarApply(*e, env, ctx);
    case Expr::Kind::Def:
      return desugarDef(*e, env);
  }
  throw Error(ErrorKind::SyntaxError, "malformed expression", e->pos);
}

}  // namespace

ExprPtr desugar(const ExprPtr& raw, const SigEnv& env) {
  return desugarExpr(raw, env, PosCtx::Normal);
}

ExprPtr desugarProgram(const ExprPtr& rawSeq, const SigEnv& env) {
  ExprPtr seq = rawSeq;
  if (seq->kind != Expr::Kind::Seq) seq = mkSeq({seq}, false, rawSeq->pos);
  return desugarExpr(mkApply("program", {bracedArg(seq)}, seq->pos), env,
                     PosCtx::Normal);
}

}  // namespace howard
