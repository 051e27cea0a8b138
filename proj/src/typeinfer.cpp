#include "typeinfer.hpp"

#include <utility>

namespace howard {

TypePtr tGround(std::string name) {
  auto t = std::make_shared<TypeValue>();
  t->kind = TypeValue::Kind::Ground;
  t->name = std::move(name);
  return t;
}
TypePtr tApplied(TypePtr arg, std::string op) {
  auto t = std::make_shared<TypeValue>();
  t->kind = TypeValue::Kind::Applied;
  t->arg = std::move(arg);
  t->name = std::move(op);
  return t;
}

std::string renderType(const TypePtr& t) {
  switch (t->kind) {
    case TypeValue::Kind::Ground:
      return t->name;
    case TypeValue::Kind::Applied:
      return renderType(t->arg) + " " + t->name;
    case TypeValue::Kind::Var:
      return "'" + t->name + std::to_string(t->id);
    case TypeValue::Kind::Nominal:
      return t->name + "#" + std::to_string(t->id);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// TEnv
// ---------------------------------------------------------------------------

TEnv TEnv::bind(const std::string& name, SigPtr sig, TypeVars vars) const {
  auto n = std::make_shared<Node>();
  n->key = name;
  n->entry = Entry{std::move(sig), std::move(vars)};
  n->parent = head_;
  TEnv out;
  out.head_ = n;
  return out;
}

TEnv TEnv::bindOp(std::shared_ptr<const OperatorSpec> op,
                  TypeVars vars) const {
  auto n = std::make_shared<Node>();
  n->key = op->symbol;
  n->op = OpEntry{std::move(op), std::move(vars)};
  n->isOp = true;
  n->parent = head_;
  TEnv out;
  out.head_ = n;
  return out;
}

const TEnv::Entry* TEnv::lookup(const std::string& name) const {
  for (const Node* n = head_.get(); n; n = n->parent.get())
    if (!n->isOp && n->key == name) return &n->entry;
  return nullptr;
}

std::vector<const TEnv::OpEntry*> TEnv::lookupOps(
    const std::string& symbol) const {
  std::vector<const OpEntry*> out;
  for (const Node* n = head_.get(); n; n = n->parent.get())
    if (n->isOp && n->key == symbol) out.push_back(&n->op);
  return out;
}

// ---------------------------------------------------------------------------
// Inference
// ---------------------------------------------------------------------------

namespace {

const std::vector<OperatorSpec>& builtinOps() {
  static const std::vector<OperatorSpec> ops = [] {
    std::vector<OperatorSpec> v;
    auto add = [&](const char* sym, const char* l, const char* r,
                   const char* res) {
      OperatorSpec o;
      o.symbol = sym;
      o.lhs.chain = {l};
      o.rhs.chain = {r};
      o.result.chain = {res};
      v.push_back(std::move(o));
    };
    for (const char* s : {"+", "-", "*", "/", "=", "<", ">"})
      add(s, "int", "int", "int");
    add("<<", "Output", "int", "Output");
    add("<<", "Output", "string", "Output");
    return v;
  }();
  return ops;
}

struct Infer {
  int nextId = 1;
  std::map<int, TypePtr> solved;
  std::vector<std::string>* dump = nullptr;

  TypePtr freshVar(const std::string& name) {
    auto t = std::make_shared<TypeValue>();
    t->kind = TypeValue::Kind::Var;
    t->name = name;
    t->id = nextId++;
    return t;
  }
  TypePtr freshNominal(const std::string& name) {
    auto t = std::make_shared<TypeValue>();
    t->kind = TypeValue::Kind::Nominal;
    t->name = name;
    t->id = nextId++;
    return t;
  }

  TypePtr resolve(TypePtr t) {
    while (t->kind == TypeValue::Kind::Var) {
      auto it = solved.find(t->id);
      if (it == solved.end()) break;
      t = it->second;
    }
    return t;
  }

  TypePtr zonk(TypePtr t) {
    t = resolve(std::move(t));
    if (t->kind == TypeValue::Kind::Applied) {
      TypePtr a = zonk(t->arg);
      if (a != t->arg) return tApplied(std::move(a), t->name);
    }
    return t;
  }

  bool occurs(int id, const TypePtr& t0) {
    TypePtr t = resolve(t0);
    if (t->kind == TypeValue::Kind::Var) return t->id == id;
    if (t->kind == TypeValue::Kind::Applied) return occurs(id, t->arg);
    return false;
  }

  bool unifyRec(TypePtr a, TypePtr b, std::vector<int>& trail) {
    a = resolve(a);
    b = resolve(b);
    if (a->kind == TypeValue::Kind::Var) {
      if (b->kind == TypeValue::Kind::Var && a->id == b->id) return true;
      if (occurs(a->id, b)) return false;
      solved[a->id] = b;
      trail.push_back(a->id);
      return true;
    }
    if (b->kind == TypeValue::Kind::Var) return unifyRec(b, a, trail);
    if (a->kind != b->kind) return false;
    switch (a->kind) {
      case TypeValue::Kind::Ground:
        return a->name == b->name;
      case TypeValue::Kind::Nominal:
        return a->id == b->id;
      case TypeValue::Kind::Applied:
        return a->name == b->name && unifyRec(a->arg, b->arg, trail);
      default:
        return false;
    }
  }

  void rollback(const std::vector<int>& trail) {
    for (int id : trail) solved.erase(id);
  }

  void unify(const TypePtr& a, const TypePtr& b, SourcePos pos) {
    std::vector<int> trail;
    if (!unifyRec(a, b, trail)) {
      rollback(trail);
      throw Error(ErrorKind::TypeMismatch,
                  "cannot unify " + renderType(zonk(a)) + " with " +
                      renderType(zonk(b)),
                  pos);
    }
  }

  TypePtr resolveTypeExpr(const TypeExprAst& te, const TEnv::TypeVars& vars) {
    if (te.chain.empty()) return tGround("void");
    TypePtr t;
    auto it = vars.find(te.chain[0]);
    t = it != vars.end() ? it->second : tGround(te.chain[0]);
    for (size_t i = 1; i < te.chain.size(); ++i) {
      auto jt = vars.find(te.chain[i]);
      if (jt != vars.end())
        throw Error(ErrorKind::UnsupportedFeature,
                    "type parameter '" + te.chain[i] +
                        "' used as a type operator");
      t = tApplied(t, te.chain[i]);
    }
    return t;
  }

  // Binds the implicit names (and operator symbols) of one parameter level.
  TEnv bindMembers(TEnv env, const SignatureSpec& param,
                   const std::optional<std::string>& label,
                   const TEnv::TypeVars& vars) {
    auto add = [&](const SigPtr& m) {
      env = env.bind(m->name, m, vars);
      if (label) env = env.bind(*label + "." + m->name, m, vars);
    };
    for (const auto& g : param.params) {
      if (g.kind == ParamGroup::Kind::ByName) {
        add(g.byName);
      } else if (g.kind == ParamGroup::Kind::ByValue) {
        for (const auto& v : g.byValue) add(v);
      } else {
        env = env.bindOp(g.op, vars);
      }
    }
    return env;
  }

  TypePtr inferSeq(const ExprPtr& seq, const TEnv& env) {
    TypePtr last = tGround("void");
    for (const auto& m : seq->items) last = inferExpr(m, env);
    return last;
  }

  TypePtr inferApply(const Expr& e, const TEnv& env) {
    std::string full = e.qualifier ? *e.qualifier + "." + e.op : e.op;
    const TEnv::Entry* entry = env.lookup(full);
    if (!entry)
      throw Error(ErrorKind::UnknownOperation,
                  "unknown operation '" + full + "'", e.pos);
    const SignatureSpec& sig = *entry->sig;

    TEnv::TypeVars inst = entry->vars;
    for (const auto& p : sig.typeParams)
      if (!inst.count(p.name)) inst[p.name] = freshVar(p.name);

    size_t ai = 0;
    for (const auto& g : sig.params) {
      if (g.kind == ParamGroup::Kind::Operator) continue;
      if (ai >= e.args.size())
        throw Error(ErrorKind::ArityMismatch,
                    "'" + full + "' applied to too few arguments", e.pos);
      const Arg& a = e.args[ai++];
      if (g.kind == ParamGroup::Kind::ByName) {
        TEnv::TypeVars memberVars = inst;
        for (const auto& q : g.byName->typeParams)
          memberVars[q.name] = freshNominal(q.name);
        TEnv inner = bindMembers(env, *g.byName, a.label, memberVars);
        TypePtr t = inferSeq(a.body, inner);
        if (g.byName->result)
          unify(t, resolveTypeExpr(*g.byName->result, memberVars), e.pos);
      } else {
        for (size_t k = 0; k < g.byValue.size(); ++k) {
          TypePtr t = inferExpr(a.items.at(k), env);
          const auto& v = g.byValue[k];
          if (v->result) unify(t, resolveTypeExpr(*v->result, inst), e.pos);
        }
      }
    }

    if (full == "INTERPRET") e.typeNote = std::make_shared<TEnv>(env);

    TypePtr result =
        sig.result ? resolveTypeExpr(*sig.result, inst) : tGround("void");
    if (dump) {
      std::string line = std::to_string(e.pos.line) + ":" +
                         std::to_string(e.pos.column) + " " + full;
      for (const auto& p : sig.typeParams) {
        auto it = inst.find(p.name);
        if (it != inst.end())
          line += " " + p.name + "=" + renderType(zonk(it->second));
      }
      line += " : " + renderType(zonk(result));
      dump->push_back(std::move(line));
    }
    return result;
  }

  TypePtr inferInfix(const Expr& e, const TEnv& env) {
    TypePtr lt = inferExpr(e.lhs, env);
    TypePtr rt = inferExpr(e.rhs, env);
    if (e.sym == "?") return freshVar("app");
    if (e.sym == "::") {
      TypePtr elem = freshVar("T");
      unify(lt, elem, e.pos);
      unify(rt, tApplied(elem, "List"), e.pos);
      return tApplied(elem, "List");
    }

    struct Cand {
      const OperatorSpec* op;
      TEnv::TypeVars vars;
    };
    std::vector<Cand> cands;
    for (const auto* oe : env.lookupOps(e.sym))
      cands.push_back({oe->op.get(), oe->vars});
    for (const auto& b : builtinOps())
      if (b.symbol == e.sym) cands.push_back({&b, {}});
    if (cands.empty())
      throw Error(ErrorKind::UnknownOperator,
                  "no operator '" + e.sym + "' in scope", e.pos);

    const Cand* hit = nullptr;
    for (const auto& c : cands) {
      TEnv::TypeVars vars = c.vars;
      for (const auto& p : c.op->typeParams)
        if (!vars.count(p.name)) vars[p.name] = freshVar(p.name);
      std::vector<int> trail;
      bool ok = unifyRec(lt, resolveTypeExpr(c.op->lhs, vars), trail) &&
                unifyRec(rt, resolveTypeExpr(c.op->rhs, vars), trail);
      rollback(trail);
      if (ok) {
        if (hit)
          throw Error(ErrorKind::UnknownOperator,
                      "ambiguous operator '" + e.sym + "'", e.pos);
        hit = &c;
      }
    }
    if (!hit)
      throw Error(ErrorKind::TypeMismatch,
                  "no overload of '" + e.sym + "' accepts (" +
                      renderType(zonk(lt)) + ", " + renderType(zonk(rt)) +
                      ")",
                  e.pos);
    TEnv::TypeVars vars = hit->vars;
    for (const auto& p : hit->op->typeParams)
      if (!vars.count(p.name)) vars[p.name] = freshVar(p.name);
    unify(lt, resolveTypeExpr(hit->op->lhs, vars), e.pos);
    unify(rt, resolveTypeExpr(hit->op->rhs, vars), e.pos);
    return resolveTypeExpr(hit->op->result, vars);
  }

  TypePtr inferDef(const Expr& e, const TEnv& env) {
    const SignatureSpec& sig = *e.sig;
    TEnv::TypeVars rigid;
    for (const auto& p : sig.typeParams)
      rigid[p.name] = freshNominal(p.name);
    TEnv defEnv = env.bind(sig.name, e.sig, rigid);
    for (const auto& g : sig.params) {
      if (g.kind == ParamGroup::Kind::ByName)
        defEnv = defEnv.bind(g.byName->name, g.byName, rigid);
      else if (g.kind == ParamGroup::Kind::ByValue)
        for (const auto& v : g.byValue) defEnv = defEnv.bind(v->name, v, rigid);
      else
        defEnv = defEnv.bindOp(g.op, rigid);
    }
    TypePtr tb = inferSeq(e.defBody, defEnv);
    if (sig.result) unify(tb, resolveTypeExpr(*sig.result, rigid), e.pos);

    TEnv appEnv = env.bind(sig.name, e.sig);
    return inferSeq(e.appBody, appEnv);
  }

  TypePtr inferExpr(const ExprPtr& e, const TEnv& env) {
    switch (e->kind) {
      case Expr::Kind::IntConst:
        return tGround("int");
      case Expr::Kind::StrConst:
        return tGround("string");
      case Expr::Kind::Seq:
        return inferSeq(e, env);
      case Expr::Kind::Apply:
        return inferApply(*e, env);
      case Expr::Kind::Infix:
        return inferInfix(*e, env);
      case Expr::Kind::Def:
        return inferDef(*e, env);
      case Expr::Kind::ListLit:
        break;
    }
    throw Error(ErrorKind::TypeMismatch, "form not typable", e->pos);
  }
};

}  // namespace

InferResult infer(const ExprPtr& core, const TEnv& env, bool wantDump) {
  Infer in;
  InferResult res;
  if (wantDump) in.dump = &res.dump;
  TypePtr t = in.inferExpr(core, env);
  res.type = in.zonk(t);
  if (wantDump) in.dump = nullptr;
  return res;
}

}  // namespace howard
