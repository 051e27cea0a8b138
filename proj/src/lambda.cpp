#include "lambda.hpp"

#include <set>
#include <utility>

namespace howard {

TermPtr mkVar(std::string n) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->name = std::move(n);
  return t;
}
TermPtr mkLam(std::string n, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Lam;
  t->name = std::move(n);
  t->a = std::move(body);
  return t;
}
TermPtr mkApp(TermPtr f, TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::App;
  t->a = std::move(f);
  t->b = std::move(a);
  return t;
}
TermPtr mkNum(std::int64_t v) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Num;
  t->num = v;
  return t;
}
TermPtr mkStrT(std::string v) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Str;
  t->str = std::move(v);
  return t;
}
TermPtr mkOp(std::string sym, TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Op;
  t->sym = std::move(sym);
  t->a = std::move(l);
  t->b = std::move(r);
  return t;
}

std::string NameSupply::fresh(const std::string& base) {
  int& n = used_[base];
  ++n;
  if (n == 1) return base;
  std::string cand = base + "_" + std::to_string(n);
  while (used_.count(cand)) cand += "'";
  used_[cand] = 1;
  return cand;
}

// ---------------------------------------------------------------------------
// Translation
// ---------------------------------------------------------------------------

namespace {

using Renames = std::map<std::string, std::string>;

struct Tx {
  SigEnv sigs;
  Renames names;  // source name (and "label.member") -> distinct var name
  NameSupply* ns;
};

TermPtr txExpr(const ExprPtr& e, const Tx& cx);

[[noreturn]] void unsupported(const std::string& what, SourcePos pos) {
  throw Error(ErrorKind::UnsupportedFeature,
              what + " has no lambda translation", pos);
}

// Implicit names of a parameter, in declaration order.
std::vector<SigPtr> membersOf(const SignatureSpec& param, SourcePos pos) {
  std::vector<SigPtr> ms;
  for (const auto& g : param.params) {
    if (g.kind == ParamGroup::Kind::ByName)
      ms.push_back(g.byName);
    else
      unsupported("a by-value or operator parameter", pos);
  }
  return ms;
}

TermPtr txBody(const ExprPtr& body, const Tx& cx) {
  if (body->kind != Expr::Kind::Seq) return txExpr(body, cx);
  if (body->items.empty()) unsupported("an empty brace", body->pos);
  TermPtr out = txExpr(body->items.back(), cx);
  for (size_t i = body->items.size() - 1; i-- > 0;) {
    std::string dummy = cx.ns->fresh("_seq");
    out = mkApp(mkLam(dummy, out), txExpr(body->items[i], cx));
  }
  return out;
}

// One argument: abstractions for the parameter's implicit names around the
// translated body.
TermPtr txArg(const Arg& a, const SignatureSpec& param, const Tx& cx) {
  if (a.isValueList) unsupported("a value argument", param.pos);
  Tx inner = cx;
  inner.sigs = inner.sigs.bindMembers(param, a.label ? &*a.label : nullptr);
  std::vector<std::string> binders;
  for (const auto& m : membersOf(param, param.pos)) {
    std::string u = cx.ns->fresh(m->name);
    binders.push_back(u);
    inner.names[m->name] = u;
    if (a.label) inner.names[*a.label + "." + m->name] = u;
  }
  TermPtr t = txBody(a.body, inner);
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    t = mkLam(*it, t);
  return t;
}

TermPtr txApply(const Expr& e, const Tx& cx) {
  std::string full = e.qualifier ? *e.qualifier + "." + e.op : e.op;
  if (full == "program" && e.args.size() == 1 && !e.args[0].isValueList)
    return txBody(e.args[0].body, cx);

  auto rn = cx.names.find(full);
  if (rn == cx.names.end())
    unsupported("operation '" + full + "'", e.pos);
  SigPtr sig = cx.sigs.lookupPtr(full);
  if (!sig)
    throw Error(ErrorKind::UnknownOperation, "unknown operation '" + full + "'",
                e.pos);

  TermPtr t = mkVar(rn->second);
  size_t ai = 0;
  for (const auto& g : sig->params) {
    if (g.kind != ParamGroup::Kind::ByName)
      unsupported("a by-value or operator parameter of '" + full + "'", e.pos);
    t = mkApp(std::move(t), txArg(e.args.at(ai++), *g.byName, cx));
  }
  return t;
}

TermPtr txDef(const Expr& e, const Tx& cx) {
  // (\f. T(application body)) (\P1...\Pn. T(defining body))
  const SignatureSpec& sig = *e.sig;
  Tx defCx = cx;
  defCx.sigs = defCx.sigs.bind(sig.name, e.sig);
  std::vector<std::string> binders;
  for (const auto& g : sig.params) {
    if (g.kind != ParamGroup::Kind::ByName)
      unsupported("a by-value or operator parameter of '" + sig.name + "'",
                  e.pos);
    std::string u = cx.ns->fresh(g.byName->name);
    binders.push_back(u);
    defCx.names[g.byName->name] = u;
    defCx.sigs = defCx.sigs.bind(g.byName->name, g.byName);
  }
  TermPtr defT = txBody(e.defBody, defCx);
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    defT = mkLam(*it, defT);

  Tx appCx = cx;
  appCx.sigs = appCx.sigs.bind(sig.name, e.sig);
  std::string u = cx.ns->fresh(sig.name);
  appCx.names[sig.name] = u;
  TermPtr appT = txBody(e.appBody, appCx);
  return mkApp(mkLam(u, std::move(appT)), std::move(defT));
}

TermPtr txExpr(const ExprPtr& e, const Tx& cx) {
  switch (e->kind) {
    case Expr::Kind::IntConst:
      return mkNum(e->intValue);
    case Expr::Kind::StrConst:
      return mkStrT(e->strValue);
    case Expr::Kind::Infix:
      if (e->sym == "?")
        return mkApp(txExpr(e->lhs, cx), txExpr(e->rhs, cx));
      if (e->sym == ":=" || e->sym == "<<" || e->sym == ">>" || e->sym == "::")
        unsupported("operator '" + e->sym + "'", e->pos);
      return mkOp(e->sym, txExpr(e->lhs, cx), txExpr(e->rhs, cx));
    case Expr::Kind::Apply:
      return txApply(*e, cx);
    case Expr::Kind::Def:
      return txDef(*e, cx);
    case Expr::Kind::Seq:
      return txBody(e, cx);
    case Expr::Kind::ListLit:
      break;
  }
  unsupported("this form", e->pos);
}

}  // namespace

TermPtr translate(const ExprPtr& core, const SigEnv& env, NameSupply& ns) {
  Tx cx{env, {}, &ns};
  return txExpr(core, cx);
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

namespace {

void collectFree(const TermPtr& t, std::set<std::string>& bound,
                 std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case Term::Kind::Lam: {
      bool added = bound.insert(t->name).second;
      collectFree(t->a, bound, out);
      if (added) bound.erase(t->name);
      return;
    }
    case Term::Kind::App:
    case Term::Kind::Op:
      collectFree(t->a, bound, out);
      collectFree(t->b, bound, out);
      return;
    default:
      return;
  }
}

std::set<std::string> freeVars(const TermPtr& t) {
  std::set<std::string> bound, out;
  collectFree(t, bound, out);
  return out;
}

TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& v) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name == x ? v : t;
    case Term::Kind::Lam: {
      if (t->name == x) return t;
      auto fv = freeVars(v);
      if (fv.count(t->name)) {
        auto bodyFv = freeVars(t->a);
        std::string y = t->name;
        do y += "'";
        while (fv.count(y) || bodyFv.count(y) || y == x);
        TermPtr renamed = subst(t->a, t->name, mkVar(y));
        return mkLam(y, subst(renamed, x, v));
      }
      return mkLam(t->name, subst(t->a, x, v));
    }
    case Term::Kind::App:
      return mkApp(subst(t->a, x, v), subst(t->b, x, v));
    case Term::Kind::Op:
      return mkOp(t->sym, subst(t->a, x, v), subst(t->b, x, v));
    default:
      return t;
  }
}

std::int64_t foldOp(const std::string& sym, std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  bool ovf = false;
  if (sym == "+")
    ovf = __builtin_add_overflow(a, b, &r);
  else if (sym == "-")
    ovf = __builtin_sub_overflow(a, b, &r);
  else if (sym == "*")
    ovf = __builtin_mul_overflow(a, b, &r);
  else if (sym == "/") {
    if (b == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (a == INT64_MIN && b == -1) ovf = true;
    else r = a / b;
  } else if (sym == "=")
    r = a == b;
  else if (sym == "<")
    r = a < b;
  else if (sym == ">")
    r = a > b;
  else
    throw Error(ErrorKind::UnknownOperator,
                "operator '" + sym + "' on numbers");
  if (ovf) throw Error(ErrorKind::OverflowError, "integer overflow");
  return r;
}

void burn(long& fuel) {
  if (--fuel < 0)
    throw Error(ErrorKind::FuelExhausted, "reduction fuel exhausted");
}

TermPtr whnf(TermPtr t, long& fuel) {
  for (;;) {
    if (t->kind != Term::Kind::App) return t;
    TermPtr f = whnf(t->a, fuel);
    if (f->kind == Term::Kind::Lam) {
      burn(fuel);
      t = subst(f->a, f->name, t->b);
    } else {
      return f == t->a ? t : mkApp(f, t->b);
    }
  }
}

TermPtr nf(TermPtr t, long& fuel) {
  t = whnf(std::move(t), fuel);
  switch (t->kind) {
    case Term::Kind::Lam:
      return mkLam(t->name, nf(t->a, fuel));
    case Term::Kind::App:
      return mkApp(nf(t->a, fuel), nf(t->b, fuel));
    case Term::Kind::Op: {
      TermPtr l = nf(t->a, fuel);
      TermPtr r = nf(t->b, fuel);
      if (l->kind == Term::Kind::Num && r->kind == Term::Kind::Num) {
        burn(fuel);
        return mkNum(foldOp(t->sym, l->num, r->num));
      }
      return mkOp(t->sym, l, r);
    }
    default:
      return t;
  }
}

bool alphaEqRec(const TermPtr& a, const TermPtr& b, Renames& ab, Renames& ba) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: {
      auto i = ab.find(a->name);
      auto j = ba.find(b->name);
      if (i == ab.end() && j == ba.end()) return a->name == b->name;
      return i != ab.end() && j != ba.end() && i->second == b->name &&
             j->second == a->name;
    }
    case Term::Kind::Lam: {
      Renames ab2 = ab, ba2 = ba;
      ab2[a->name] = b->name;
      ba2[b->name] = a->name;
      return alphaEqRec(a->a, b->a, ab2, ba2);
    }
    case Term::Kind::App:
      return alphaEqRec(a->a, b->a, ab, ba) && alphaEqRec(a->b, b->b, ab, ba);
    case Term::Kind::Op:
      return a->sym == b->sym && alphaEqRec(a->a, b->a, ab, ba) &&
             alphaEqRec(a->b, b->b, ab, ba);
    case Term::Kind::Num:
      return a->num == b->num;
    case Term::Kind::Str:
      return a->str == b->str;
  }
  return false;
}

void dumpRec(const TermPtr& t, std::string& out, int prec) {
  switch (t->kind) {
    case Term::Kind::Var:
      out += t->name;
      return;
    case Term::Kind::Num:
      out += std::to_string(t->num);
      return;
    case Term::Kind::Str:
      out += '"' + t->str + '"';
      return;
    case Term::Kind::Lam: {
      if (prec > 0) out += '(';
      out += "\\" + t->name;
      TermPtr body = t->a;
      while (body->kind == Term::Kind::Lam) {
        out += " " + body->name;
        body = body->a;
      }
      out += ".";
      dumpRec(body, out, 0);
      if (prec > 0) out += ')';
      return;
    }
    case Term::Kind::App: {
      if (prec > 1) out += '(';
      dumpRec(t->a, out, 1);
      out += ' ';
      dumpRec(t->b, out, 2);
      if (prec > 1) out += ')';
      return;
    }
    case Term::Kind::Op: {
      if (prec > 0) out += '(';
      dumpRec(t->a, out, 2);
      out += ' ' + t->sym + ' ';
      dumpRec(t->b, out, 2);
      if (prec > 0) out += ')';
      return;
    }
  }
}

}  // namespace

TermPtr normalize(const TermPtr& t, long fuel) {
  long f = fuel;
  return nf(t, f);
}

bool alphaEq(const TermPtr& a, const TermPtr& b) {
  Renames ab, ba;
  return alphaEqRec(a, b, ab, ba);
}

std::string dumpTerm(const TermPtr& t) {
  std::string out;
  dumpRec(t, out, 0);
  return out;
}

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& v) {
  return subst(t, x, v);
}

std::set<std::string> freeTermVars(const TermPtr& t) { return freeVars(t); }

}  // namespace howard
