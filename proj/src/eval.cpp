#include "eval.hpp"

#include <utility>

#include "diag.hpp"

namespace howard {

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

RtPtr rtInt(std::int64_t v) {
  auto r = std::make_shared<RtValue>();
  r->kind = RtValue::Kind::Int;
  r->i = v;
  return r;
}
RtPtr rtStr(std::string v) {
  auto r = std::make_shared<RtValue>();
  r->kind = RtValue::Kind::Str;
  r->s = std::move(v);
  return r;
}
RtPtr rtBool(bool v) {
  auto r = std::make_shared<RtValue>();
  r->kind = RtValue::Kind::Bool;
  r->b = v;
  return r;
}
RtPtr rtUnit() {
  static const RtPtr u = std::make_shared<RtValue>();
  return u;
}
RtPtr rtList(std::vector<RtPtr> items) {
  auto r = std::make_shared<RtValue>();
  r->kind = RtValue::Kind::List;
  r->list = std::move(items);
  return r;
}

std::string renderValue(const RtPtr& v) {
  switch (v->kind) {
    case RtValue::Kind::Int:
      return std::to_string(v->i);
    case RtValue::Kind::Str:
      return v->s;
    case RtValue::Kind::Bool:
      return v->b ? "true" : "false";
    case RtValue::Kind::Unit:
      return "";
    case RtValue::Kind::List: {
      std::string out = "[";
      for (size_t k = 0; k < v->list.size(); ++k) {
        if (k) out += ", ";
        out += renderValue(v->list[k]);
      }
      return out + "]";
    }
    case RtValue::Kind::Operation:
      return "<" + (v->op && v->op->sig ? v->op->sig->name : "operation") +
             ">";
    case RtValue::Kind::Cell:
      return "<cell " + std::to_string(v->cell) + ">";
    case RtValue::Kind::Port:
      return v->isOutput ? "<output>" : "<input>";
  }
  return "";
}

bool valueEquals(const RtPtr& a, const RtPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case RtValue::Kind::Int:
      return a->i == b->i;
    case RtValue::Kind::Str:
      return a->s == b->s;
    case RtValue::Kind::Bool:
      return a->b == b->b;
    case RtValue::Kind::Unit:
      return true;
    case RtValue::Kind::List: {
      if (a->list.size() != b->list.size()) return false;
      for (size_t k = 0; k < a->list.size(); ++k)
        if (!valueEquals(a->list[k], b->list[k])) return false;
      return true;
    }
    case RtValue::Kind::Cell:
      return a->cell == b->cell;
    default:
      return a.get() == b.get();
  }
}

// ---------------------------------------------------------------------------
// Environment / store
// ---------------------------------------------------------------------------

RtEnv RtEnv::bind(const std::string& name, CallablePtr c) const {
  auto n = std::make_shared<Node>();
  n->key = name;
  n->value = std::move(c);
  n->parent = head_;
  RtEnv out;
  out.head_ = n;
  return out;
}

CallablePtr RtEnv::lookup(const std::string& name) const {
  for (const Node* n = head_.get(); n; n = n->parent.get())
    if (n->key == name) return n->value;
  return nullptr;
}

void Store::print(const std::string& bytes) {
  effects.push_back("PRINT " + bytes);
  if (sink) sink(bytes);
}

void Store::assign(int cell, const RtPtr& v) {
  effects.push_back("ASSIGN " + std::to_string(cell) + " " + renderValue(v));
}

void Store::burn(SourcePos pos) {
  if (--fuel < 0)
    throw Error(ErrorKind::FuelExhausted, "evaluation step budget exhausted",
                pos);
}

CallablePtr memoCallable(SigPtr sig, RtPtr value) {
  auto c = std::make_shared<Callable>();
  c->impl = Callable::Impl::Memo;
  c->sig = std::move(sig);
  c->memo = std::move(value);
  return c;
}

CallablePtr intrinsicCallable(
    SigPtr sig, std::function<RtPtr(const Expr&, const RtEnv&, Store&)> fn) {
  auto c = std::make_shared<Callable>();
  c->impl = Callable::Impl::Intrinsic;
  c->sig = std::move(sig);
  c->intrinsic = std::move(fn);
  return c;
}

CallablePtr definedCallable(SigPtr sig, ExprPtr body, RtEnv env) {
  auto c = std::make_shared<Callable>();
  c->impl = Callable::Impl::Defined;
  c->sig = std::move(sig);
  c->body = std::move(body);
  c->env = std::move(env);
  return c;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

std::int64_t asInt(const RtPtr& v, SourcePos pos) {
  if (v->kind != RtValue::Kind::Int)
    throw Error(ErrorKind::RuntimeTypeError,
                "expected an int, got " + renderValue(v), pos);
  return v->i;
}

bool truthy(const RtPtr& v, SourcePos pos) {
  if (v->kind == RtValue::Kind::Bool) return v->b;
  if (v->kind == RtValue::Kind::Int) return v->i != 0;
  throw Error(ErrorKind::RuntimeTypeError,
              "expected a condition value, got " + renderValue(v), pos);
}

// Binds one parameter's implicit names in `env`, qualified by `label` too.
RtEnv bindOne(RtEnv env, const std::string& name,
              const std::optional<std::string>& label, CallablePtr c) {
  env = env.bind(name, c);
  if (label) env = env.bind(*label + "." + name, std::move(c));
  return env;
}

// Extends `into` with the parameter bindings a call site supplies for `sig`.
// By-name arguments close over the caller's environment; by-value items are
// evaluated here, exactly once. `qual` is the level label the caller gave
// this operation's argument (if any): the names bound here — the level's
// members — are additionally visible under that qualifier.
RtEnv bindParams(RtEnv into, const SignatureSpec& sig,
                 const std::optional<std::string>& qual,
                 const std::vector<Arg>& args, const RtEnv& callerEnv,
                 Store& st, SourcePos pos) {
  size_t ai = 0;
  for (const auto& g : sig.params) {
    if (g.kind == ParamGroup::Kind::Operator) continue;
    if (ai >= args.size())
      throw Error(ErrorKind::ArityMismatch,
                  "'" + sig.name + "' applied to too few arguments", pos);
    const Arg& a = args[ai++];
    if (g.kind == ParamGroup::Kind::ByName) {
      auto c = std::make_shared<Callable>();
      c->impl = Callable::Impl::ByNameArg;
      c->sig = g.byName;
      c->body = a.body;
      c->env = callerEnv;
      c->label = a.label;
      into = bindOne(std::move(into), g.byName->name, qual, std::move(c));
    } else {
      for (size_t k = 0; k < g.byValue.size(); ++k) {
        RtPtr v = eval(a.items.at(k), callerEnv, st);
        into = bindOne(std::move(into), g.byValue[k]->name, qual,
                       memoCallable(g.byValue[k], std::move(v)));
      }
    }
  }
  return into;
}

RtPtr evalInfix(const Expr& e, const RtEnv& env, Store& st) {
  const std::string& s = e.sym;
  if (s == ":=") {
    RtPtr lhs = eval(e.lhs, env, st);
    if (lhs->kind != RtValue::Kind::Cell)
      throw Error(ErrorKind::RuntimeTypeError,
                  "left side of ':=' is not assignable", e.pos);
    RtPtr v = eval(e.rhs, env, st);
    st.cells.at(lhs->cell) = v;
    st.assign(lhs->cell, v);
    return v;
  }
  RtPtr l = eval(e.lhs, env, st);
  RtPtr r = eval(e.rhs, env, st);
  if (s == "::") {
    if (r->kind != RtValue::Kind::List)
      throw Error(ErrorKind::RuntimeTypeError,
                  "right side of '::' is not a list", e.pos);
    std::vector<RtPtr> items;
    items.reserve(r->list.size() + 1);
    items.push_back(l);
    items.insert(items.end(), r->list.begin(), r->list.end());
    return rtList(std::move(items));
  }
  if (s == "<<") {
    if (l->kind != RtValue::Kind::Port || !l->isOutput)
      throw Error(ErrorKind::RuntimeTypeError,
                  "left side of '<<' is not an output port", e.pos);
    if (r->kind == RtValue::Kind::Int || r->kind == RtValue::Kind::Str)
      st.print(renderValue(r));
    else
      throw Error(ErrorKind::RuntimeTypeError,
                  "cannot print " + renderValue(r), e.pos);
    return l;
  }
  if (s == "=") return rtInt(valueEquals(l, r) ? 1 : 0);
  if (s == "<") return rtInt(asInt(l, e.pos) < asInt(r, e.pos) ? 1 : 0);
  if (s == ">") return rtInt(asInt(l, e.pos) > asInt(r, e.pos) ? 1 : 0);
  if (s == "+" || s == "-" || s == "*" || s == "/") {
    std::int64_t a = asInt(l, e.pos), b = asInt(r, e.pos), out = 0;
    bool ovf = false;
    if (s == "+")
      ovf = __builtin_add_overflow(a, b, &out);
    else if (s == "-")
      ovf = __builtin_sub_overflow(a, b, &out);
    else if (s == "*")
      ovf = __builtin_mul_overflow(a, b, &out);
    else {
      if (b == 0)
        throw Error(ErrorKind::DivisionByZero, "division by zero", e.pos);
      if (a == INT64_MIN && b == -1)
        ovf = true;
      else
        out = a / b;
    }
    if (ovf)
      throw Error(ErrorKind::OverflowError, "integer overflow in '" + s + "'",
                  e.pos);
    return rtInt(out);
  }
  throw Error(ErrorKind::Unimplemented,
              "operator '" + s + "' has no runtime meaning", e.pos);
}

}  // namespace

RtPtr call(const CallablePtr& c, const Expr& site, const RtEnv& callerEnv,
           Store& st) {
  st.burn(site.pos);
  switch (c->impl) {
    case Callable::Impl::Memo:
      return c->memo;
    case Callable::Impl::Intrinsic:
      return c->intrinsic(site, callerEnv, st);
    case Callable::Impl::ByNameArg: {
      RtEnv env = bindParams(c->env, *c->sig, c->label, site.args, callerEnv,
                             st, site.pos);
      return eval(c->body, env, st);
    }
    case Callable::Impl::Defined: {
      RtEnv env = c->env.bind(c->sig->name, c);  // recursion sees itself
      env = bindParams(std::move(env), *c->sig, c->label, site.args,
                       callerEnv, st, site.pos);
      return eval(c->body, env, st);
    }
  }
  throw Error(ErrorKind::RuntimeTypeError, "uncallable binding", site.pos);
}

RtPtr invokeClosure(
    const CallablePtr& c,
    const std::vector<std::pair<std::string, CallablePtr>>& memberBindings,
    Store& st) {
  if (c->impl == Callable::Impl::Memo) return c->memo;
  if (c->impl != Callable::Impl::ByNameArg)
    throw Error(ErrorKind::RuntimeTypeError,
                "expected an argument closure");
  RtEnv env = c->env;
  for (const auto& [name, member] : memberBindings)
    env = bindOne(std::move(env), name, c->label, member);
  return eval(c->body, env, st);
}

RtPtr eval(const ExprPtr& e, const RtEnv& env, Store& st) {
  st.burn(e->pos);
  switch (e->kind) {
    case Expr::Kind::IntConst:
      return rtInt(e->intValue);
    case Expr::Kind::StrConst:
      return rtStr(e->strValue);
    case Expr::Kind::Seq: {
      RtPtr last = rtUnit();
      for (const auto& m : e->items) last = eval(m, env, st);
      return last;
    }
    case Expr::Kind::Infix:
      return evalInfix(*e, env, st);
    case Expr::Kind::Apply: {
      std::string full = e->qualifier ? *e->qualifier + "." + e->op : e->op;
      CallablePtr c = env.lookup(full);
      if (!c)
        throw Error(ErrorKind::UnknownOperation,
                    "unknown operation '" + full + "'", e->pos);
      return call(c, *e, env, st);
    }
    case Expr::Kind::Def: {
      RtEnv inner =
          env.bind(e->sig->name, definedCallable(e->sig, e->defBody, env));
      return eval(e->appBody, inner, st);
    }
    case Expr::Kind::ListLit:
      break;
  }
  throw Error(ErrorKind::RuntimeTypeError, "form not evaluable", e->pos);
}

}  // namespace howard
