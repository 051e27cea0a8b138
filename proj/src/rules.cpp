#include "rules.hpp"

#include <cassert>

#include "printer.hpp"

namespace howard {

// ---------------------------------------------------------------------------
// MathExpr
// ---------------------------------------------------------------------------

MathPtr mNum(std::int64_t v) {
  auto m = std::make_shared<MathExpr>();
  m->kind = MathExpr::Kind::Num;
  m->num = v;
  return m;
}
MathPtr mSym(std::string n) {
  auto m = std::make_shared<MathExpr>();
  m->kind = MathExpr::Kind::Sym;
  m->name = std::move(n);
  return m;
}
MathPtr mHole(std::string n) {
  auto m = std::make_shared<MathExpr>();
  m->kind = MathExpr::Kind::Hole;
  m->name = std::move(n);
  return m;
}
MathPtr mBin(std::string sym, MathPtr l, MathPtr r) {
  auto m = std::make_shared<MathExpr>();
  m->kind = MathExpr::Kind::BinOp;
  m->sym = std::move(sym);
  m->lhs = std::move(l);
  m->rhs = std::move(r);
  return m;
}

bool mathEquals(const MathPtr& a, const MathPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case MathExpr::Kind::Num:
      return a->num == b->num;
    case MathExpr::Kind::Sym:
    case MathExpr::Kind::Hole:
      return a->name == b->name;
    case MathExpr::Kind::BinOp:
      return a->sym == b->sym && mathEquals(a->lhs, b->lhs) &&
             mathEquals(a->rhs, b->rhs);
  }
  return false;
}

MathPtr mathSubst(const MathPtr& in, const std::string& x, const MathPtr& m) {
  switch (in->kind) {
    case MathExpr::Kind::Num:
      return in;
    case MathExpr::Kind::Sym:
    case MathExpr::Kind::Hole:
      return in->name == x ? m : in;
    case MathExpr::Kind::BinOp: {
      MathPtr l = mathSubst(in->lhs, x, m);
      MathPtr r = mathSubst(in->rhs, x, m);
      if (l == in->lhs && r == in->rhs) return in;
      return mBin(in->sym, l, r);
    }
  }
  return in;
}

bool mathMentions(const MathPtr& in, const std::string& x) {
  switch (in->kind) {
    case MathExpr::Kind::Num:
      return false;
    case MathExpr::Kind::Sym:
    case MathExpr::Kind::Hole:
      return in->name == x;
    case MathExpr::Kind::BinOp:
      return mathMentions(in->lhs, x) || mathMentions(in->rhs, x);
  }
  return false;
}

namespace {

std::int64_t foldNum(const std::string& sym, std::int64_t a, std::int64_t b) {
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
    throw Error(ErrorKind::Stuck, "no meaning for operator '" + sym + "'");
  if (ovf) throw Error(ErrorKind::OverflowError, "integer overflow");
  return r;
}

bool knownOperator(const std::string& sym) {
  return sym == "+" || sym == "-" || sym == "*" || sym == "/" || sym == "=" ||
         sym == "<" || sym == ">";
}

}  // namespace

MathPtr mathFold(const MathPtr& in) {
  if (in->kind != MathExpr::Kind::BinOp) return in;
  MathPtr l = mathFold(in->lhs);
  MathPtr r = mathFold(in->rhs);
  if (l->kind == MathExpr::Kind::Num && r->kind == MathExpr::Kind::Num &&
      knownOperator(in->sym))
    return mNum(foldNum(in->sym, l->num, r->num));
  if (l == in->lhs && r == in->rhs) return in;
  return mBin(in->sym, l, r);
}

std::string renderMath(const MathPtr& m) {
  switch (m->kind) {
    case MathExpr::Kind::Num:
      return std::to_string(m->num);
    case MathExpr::Kind::Sym:
    case MathExpr::Kind::Hole:
      return m->name;
    case MathExpr::Kind::BinOp: {
      std::string op = m->sym == "*" ? "·" : m->sym;
      return "(" + renderMath(m->lhs) + op + renderMath(m->rhs) + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Fragments, environments, steps
// ---------------------------------------------------------------------------

Fragment unknownFrag(char ctx, std::string owner) {
  Fragment f;
  f.kind = Fragment::Kind::Unknown;
  f.ctx = ctx;
  f.owner = std::move(owner);
  return f;
}
Fragment concreteFrag(ExprPtr e) {
  Fragment f;
  f.kind = Fragment::Kind::Concrete;
  f.expr = std::move(e);
  return f;
}

bool fragmentEquals(const Fragment& a, const Fragment& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Fragment::Kind::Unknown)
    return a.ctx == b.ctx && a.owner == b.owner;
  return exprEquals(a.expr, b.expr);
}

RuleEnv envPush(RuleEnv env, RulePtr r) {
  auto n = std::make_shared<RuleEnvNode>();
  n->rule = std::move(r);
  n->parent = std::move(env);
  return n;
}

ChainStep bindStep(std::string var, Fragment f, RuleEnv env) {
  ChainStep s;
  s.kind = ChainStep::Kind::Bind;
  s.var = std::move(var);
  s.frag = std::move(f);
  s.env = std::move(env);
  return s;
}
ChainStep substStep(std::string var, MathPtr m) {
  ChainStep s;
  s.kind = ChainStep::Kind::Subst;
  s.var = std::move(var);
  s.repl = std::move(m);
  return s;
}

bool ruleEquals(const RulePtr& a, const RulePtr& b) {
  if (a->head != b->head || a->resultVar != b->resultVar) return false;
  if (a->argPats.size() != b->argPats.size()) return false;
  for (size_t i = 0; i < a->argPats.size(); ++i)
    if (!fragmentEquals(a->argPats[i], b->argPats[i])) return false;
  if (a->meaning.size() != b->meaning.size()) return false;
  for (size_t i = 0; i < a->meaning.size(); ++i) {
    const ChainStep& x = a->meaning[i];
    const ChainStep& y = b->meaning[i];
    if (x.kind != y.kind || x.var != y.var) return false;
    if (x.kind == ChainStep::Kind::Bind) {
      if (!fragmentEquals(x.frag, y.frag)) return false;
    } else if (!mathEquals(x.repl, y.repl)) {
      return false;
    }
  }
  if (a->presumptions.size() != b->presumptions.size()) return false;
  for (size_t i = 0; i < a->presumptions.size(); ++i)
    if (!ruleEquals(a->presumptions[i], b->presumptions[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// DEF-scheme generation
// ---------------------------------------------------------------------------

static const char* kTheta = "θ";

namespace {

RulePtr defmacImpl(const SigPtr& sig, char inner, char outer, int& etaCount) {
  auto r = std::make_shared<Rule>();
  r->head = sig->name;
  r->resultVar = kTheta;
  for (const auto& g : sig->params) {
    switch (g.kind) {
      case ParamGroup::Kind::ByName: {
        r->argPats.push_back(unknownFrag(outer, g.byName->name));
        int sub = 0;
        r->presumptions.push_back(defmacImpl(g.byName, outer, inner, sub));
        break;
      }
      case ParamGroup::Kind::ByValue:
        for (const auto& v : g.byValue) {
          r->argPats.push_back(unknownFrag(outer, v->name));
          std::string eta = "η" + std::to_string(++etaCount);
          r->meaning.push_back(bindStep(eta, unknownFrag(outer, v->name)));
          r->meaning.push_back(substStep(v->name, mHole(eta)));
        }
        break;
      case ParamGroup::Kind::Operator: {
        // Operator members get an opaque named presumption; derivation for
        // them is out of scope.
        auto p = std::make_shared<Rule>();
        p->head = g.op->symbol;
        p->resultVar = kTheta;
        p->meaning.push_back(
            bindStep(kTheta, unknownFrag(inner, g.op->symbol)));
        r->presumptions.push_back(p);
        break;
      }
    }
  }
  r->meaning.push_back(bindStep(kTheta, unknownFrag(inner, sig->name)));
  return r;
}

bool hasByValue(const SignatureSpec& sig) {
  for (const auto& g : sig.params) {
    if (g.kind == ParamGroup::Kind::ByValue) return true;
    if (g.kind == ParamGroup::Kind::ByName && hasByValue(*g.byName))
      return true;
  }
  return false;
}

}  // namespace

RulePtr defmac(const SigPtr& sig, char inner, char outer) {
  int eta = 0;
  return defmacImpl(sig, inner, outer, eta);
}

RulePtr defscheme_cbv(const SigPtr& sig) {
  auto r = std::make_shared<Rule>();
  r->head = "DEF " + sig->name;
  r->argPats = {unknownFrag('D', sig->name), unknownFrag('E', sig->name)};
  r->resultVar = kTheta;
  r->meaning.push_back(bindStep(kTheta, unknownFrag('E', sig->name)));
  r->presumptions.push_back(defmac(sig, 'D', 'E'));
  return r;
}

RulePtr defscheme(const SigPtr& sig) {
  if (hasByValue(*sig))
    throw Error(ErrorKind::UnsupportedSignature,
                "'" + sig->name +
                    "' has by-value parameters; use the by-value scheme",
                sig->pos);
  return defscheme_cbv(sig);
}

// ---------------------------------------------------------------------------
// Instantiation
// ---------------------------------------------------------------------------

namespace {

Fragment instFrag(const Fragment& f, const Bindings& b) {
  if (f.kind == Fragment::Kind::Unknown) {
    auto it = b.find({f.ctx, f.owner});
    if (it != b.end()) return it->second;
  }
  return f;
}

}  // namespace

RulePtr instantiate(const RulePtr& r, const Bindings& b) {
  if (b.empty()) return r;
  auto out = std::make_shared<Rule>(*r);
  for (auto& p : out->argPats) p = instFrag(p, b);
  for (auto& s : out->meaning)
    if (s.kind == ChainStep::Kind::Bind) s.frag = instFrag(s.frag, b);
  for (auto& p : out->presumptions) p = instantiate(p, b);
  return out;
}

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

std::string FreshNames::fresh(const std::string& family) {
  auto [it, inserted] = counters_.try_emplace(family, seed_);
  return family + std::to_string(++it->second);
}

void FreshNames::reserve(const std::string& name) {
  size_t i = name.size();
  while (i > 0 && name[i - 1] >= '0' && name[i - 1] <= '9') --i;
  if (i == name.size() || i == 0) return;
  std::string family = name.substr(0, i);
  unsigned n = static_cast<unsigned>(std::stoul(name.substr(i)));
  unsigned& c = counters_.try_emplace(family, seed_).first->second;
  if (n > c) c = n;
}

namespace {

bool isFreshFamily(const std::string& v) {
  return v.rfind("τ", 0) == 0 || v.rfind("μ", 0) == 0 ||
         v.rfind("η", 0) == 0 || v.rfind("•", 0) == 0;
}

bool occursAfter(const Chain& c, size_t from, const std::string& v) {
  for (size_t i = from; i < c.steps.size(); ++i) {
    const ChainStep& s = c.steps[i];
    if (s.kind == ChainStep::Kind::Subst && mathMentions(s.repl, v))
      return true;
  }
  return c.terminal && mathMentions(c.terminal, v);
}

// Flattened concrete argument fragments of an application.
std::vector<Fragment> argFragments(const Expr& e) {
  std::vector<Fragment> out;
  for (const auto& a : e.args) {
    if (a.isValueList)
      for (const auto& it : a.items) out.push_back(concreteFrag(it));
    else
      out.push_back(concreteFrag(a.body));
  }
  return out;
}

bool ruleMatches(const Rule& r, const std::string& head,
                 const std::vector<Fragment>& args) {
  if (r.head != head || r.argPats.size() != args.size()) return false;
  for (size_t i = 0; i < args.size(); ++i)
    if (r.argPats[i].kind == Fragment::Kind::Concrete &&
        !fragmentEquals(r.argPats[i], args[i]))
      return false;
  return true;
}

// Instantiates a matched rule, renames its chain variables (result variable
// to v, by-value etas to fresh ones), and splices its meaning with the
// presumption instances in scope.
std::vector<ChainStep> fire(const RulePtr& rule,
                            const std::vector<Fragment>& args,
                            const std::string& v, RuleEnv env,
                            FreshNames& fresh) {
  Bindings b;
  for (size_t i = 0; i < rule->argPats.size(); ++i)
    if (rule->argPats[i].kind == Fragment::Kind::Unknown)
      b[{rule->argPats[i].ctx, rule->argPats[i].owner}] = args[i];
  RulePtr inst = instantiate(rule, b);

  std::map<std::string, std::string> ren;
  ren[inst->resultVar] = v;
  for (const auto& s : inst->meaning)
    if (s.kind == ChainStep::Kind::Bind && s.var != inst->resultVar &&
        !ren.count(s.var))
      ren[s.var] = fresh.fresh("η");

  RuleEnv newEnv = env;
  for (const auto& p : inst->presumptions) newEnv = envPush(newEnv, p);

  std::vector<ChainStep> out;
  for (ChainStep s : inst->meaning) {
    auto r = ren.find(s.var);
    if (r != ren.end()) s.var = r->second;
    if (s.kind == ChainStep::Kind::Subst) {
      for (const auto& [from, to] : ren)
        s.repl = mathSubst(s.repl, from, mHole(to));
    } else {
      s.env = newEnv;
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Replacement steps for one Bind over a concrete program, or nullopt when
// the step must be removed (empty program).
std::vector<ChainStep> rewriteBind(const Chain& c, size_t idx,
                                   FreshNames& fresh) {
  const ChainStep& st = c.steps[idx];
  const ExprPtr& e = st.frag.expr;
  const std::string& v = st.var;
  RuleEnv env = st.env;

  switch (e->kind) {
    case Expr::Kind::IntConst:
      return {substStep(v, mNum(e->intValue))};
    case Expr::Kind::StrConst:
      return {substStep(v, mSym("\"" + e->strValue + "\""))};
    case Expr::Kind::Seq: {
      if (e->items.empty()) {
        if (occursAfter(c, idx + 1, v))
          throw Error(ErrorKind::AnnihilateViolation,
                      "empty program but '" + v + "' occurs free", e->pos);
        return {};
      }
      std::vector<ChainStep> out;
      for (size_t i = 0; i + 1 < e->items.size(); ++i)
        out.push_back(
            bindStep(fresh.fresh("•"), concreteFrag(e->items[i]), env));
      out.push_back(bindStep(v, concreteFrag(e->items.back()), env));
      return out;
    }
    case Expr::Kind::Infix: {
      if (e->sym == ":=") {
        std::string target = printExpr(e->lhs);
        return {bindStep(v, concreteFrag(e->rhs), env),
                substStep(target, mHole(v))};
      }
      if (!knownOperator(e->sym))
        throw Error(ErrorKind::Stuck,
                    "no meaning for operator '" + e->sym + "'", e->pos);
      std::string fam = isFreshFamily(v) ? "μ" : "τ";
      std::string a = fresh.fresh(fam);
      std::string b = fresh.fresh(fam);
      return {bindStep(a, concreteFrag(e->lhs), env),
              bindStep(b, concreteFrag(e->rhs), env),
              substStep(v, mBin(e->sym, mHole(a), mHole(b)))};
    }
    case Expr::Kind::Def: {
      RulePtr scheme = defscheme_cbv(e->sig);
      Bindings b;
      b[{'D', e->sig->name}] = concreteFrag(e->defBody);
      b[{'E', e->sig->name}] = concreteFrag(e->appBody);
      RulePtr inst = instantiate(scheme, b);
      RuleEnv newEnv = envPush(env, inst->presumptions.at(0));
      return {bindStep(v, concreteFrag(e->appBody), newEnv)};
    }
    case Expr::Kind::Apply: {
      std::string full =
          e->qualifier ? *e->qualifier + "." + e->op : e->op;
      if (full == "program" && e->args.size() == 1 && !e->args[0].isValueList)
        return {bindStep(v, concreteFrag(e->args[0].body), env)};
      std::vector<Fragment> args = argFragments(*e);
      for (RuleEnv n = env; n; n = n->parent)
        if (ruleMatches(*n->rule, full, args))
          return fire(n->rule, args, v, env, fresh);
      if (args.empty()) return {substStep(v, mSym(full))};
      throw Error(ErrorKind::Stuck, "no rule for application of '" + full + "'",
                  e->pos);
    }
    case Expr::Kind::ListLit:
      break;
  }
  throw Error(ErrorKind::Stuck, "no axiom applies", e->pos);
}

}  // namespace

bool step(Chain& c, FreshNames& fresh) {
  for (size_t i = 0; i < c.steps.size(); ++i) {
    const ChainStep& s = c.steps[i];
    if (s.kind != ChainStep::Kind::Bind ||
        s.frag.kind != Fragment::Kind::Concrete)
      continue;
    std::vector<ChainStep> repl = rewriteBind(c, i, fresh);
    c.steps.erase(c.steps.begin() + static_cast<long>(i));
    c.steps.insert(c.steps.begin() + static_cast<long>(i), repl.begin(),
                   repl.end());
    return true;
  }
  return false;
}

MathPtr foldChain(const Chain& c, bool fold) {
  MathPtr term = c.terminal ? c.terminal : mHole(kTheta);
  for (size_t i = c.steps.size(); i-- > 0;) {
    const ChainStep& s = c.steps[i];
    if (s.kind == ChainStep::Kind::Subst) {
      term = mathSubst(term, s.var, s.repl);
    } else {
      if (mathMentions(term, s.var))
        throw Error(ErrorKind::Stuck,
                    "unreduced program bound to '" + s.var + "'");
      // value dropped; symbolic effects discarded
    }
  }
  return fold ? mathFold(term) : term;
}

MathPtr reduceChain(Chain c, const ReduceOptions& opts) {
  FreshNames fresh(opts.seed);
  for (const auto& s : c.steps) fresh.reserve(s.var);
  long fuel = opts.fuel;
  if (opts.trace) opts.trace->push_back(renderChainLine(c));
  while (step(c, fresh)) {
    if (--fuel < 0)
      throw Error(ErrorKind::FuelExhausted, "rule reduction fuel exhausted");
    if (opts.trace) {
      std::string line = renderChainLine(c);
      if (opts.trace->empty() || opts.trace->back() != line)
        opts.trace->push_back(std::move(line));
    }
  }
  return foldChain(c, opts.fold);
}

MathPtr reduceProgram(const ExprPtr& core, RuleEnv env,
                      const ReduceOptions& opts) {
  Chain c;
  c.steps.push_back(bindStep(kTheta, concreteFrag(core), env));
  c.terminal = mHole(kTheta);
  return reduceChain(std::move(c), opts);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string renderFragment(const Fragment& f) {
  if (f.kind == Fragment::Kind::Unknown)
    return std::string(1, f.ctx) + "⟨" + f.owner + "⟩";
  return printExpr(f.expr);
}

std::string renderStep(const ChainStep& s) {
  if (s.kind == ChainStep::Kind::Subst)
    return "[" + renderMath(s.repl) + "/" + s.var + "]";
  if (s.var.rfind("•", 0) == 0) return "T⟨" + renderFragment(s.frag) + "⟩";
  return "T_" + s.var + "⟨" + renderFragment(s.frag) + "⟩";
}

std::string renderChainLine(const Chain& c) {
  std::string out;
  for (const auto& s : c.steps) {
    if (!out.empty()) out += " ";
    out += renderStep(s);
  }
  if (c.terminal) out += " · " + renderMath(c.terminal);
  return out;
}

std::string renderConclusion(const Rule& r) {
  std::string out = r.head;
  for (const auto& p : r.argPats) out += "{" + renderFragment(p) + "}";
  return out;
}

namespace {

std::string renderMeaning(const Rule& r) {
  std::string out;
  for (const auto& s : r.meaning) {
    if (!out.empty()) out += " ";
    out += renderStep(s);
  }
  return out;
}

void renderTextRec(const Rule& r, int indent, std::string& out) {
  std::string pad(static_cast<size_t>(indent), ' ');
  if (r.memo) {
    out += pad + "⊣ ...\n";
    return;
  }
  std::string line = renderConclusion(r) + " ⟶ " + renderMeaning(r);
  if (indent == 0) {
    out += line;
    if (r.presumptions.empty()) out += " ⊣ ∅";
    out += "\n";
  } else {
    out += pad + "⊣ " + line + "\n";
  }
  for (const auto& p : r.presumptions) renderTextRec(*p, indent + 4, out);
}

std::string latexVar(const std::string& v) {
  auto greek = [&](const char* utf8, const char* tex) -> std::string {
    std::string u = utf8;
    if (v.rfind(u, 0) == 0) {
      std::string rest = v.substr(u.size());
      return rest.empty() ? std::string("\\") + tex
                          : std::string("\\") + tex + "_{" + rest + "}";
    }
    return "";
  };
  for (auto [u, t] : {std::pair{"θ", "theta"}, {"τ", "tau"}, {"η", "eta"},
                      {"μ", "mu"}}) {
    std::string s = greek(u, t);
    if (!s.empty()) return s;
  }
  return v;
}

std::string latexEscape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '{')
      out += "\\{";
    else if (ch == '}')
      out += "\\}";
    else if (ch == '_')
      out += "\\_";
    else if (ch == '#' || ch == '%' || ch == '&' || ch == '$')
      out += std::string("\\") + ch;
    else
      out += ch;
  }
  return out;
}

std::string latexFragment(const Fragment& f) {
  if (f.kind == Fragment::Kind::Unknown) {
    if (f.ctx == 'D') return "\\scope[D]{" + latexEscape(f.owner) + "}";
    return "\\scope{" + latexEscape(f.owner) + "}";
  }
  return "\\texttt{" + latexEscape(printExpr(f.expr)) + "}";
}

std::string latexMath(const MathPtr& m) {
  switch (m->kind) {
    case MathExpr::Kind::Num:
      return std::to_string(m->num);
    case MathExpr::Kind::Sym:
      return latexEscape(m->name);
    case MathExpr::Kind::Hole:
      return latexVar(m->name);
    case MathExpr::Kind::BinOp: {
      std::string op = m->sym == "*" ? "\\cdot " : m->sym;
      return "(" + latexMath(m->lhs) + op + latexMath(m->rhs) + ")";
    }
  }
  return "?";
}

std::string latexChain(const Rule& r) {
  std::string out;
  for (const auto& s : r.meaning) {
    if (s.kind == ChainStep::Kind::Subst) {
      out += "\\Subst[" + latexEscape(s.var) + "]{" + latexMath(s.repl) + "}";
    } else if (s.var == kTheta) {
      out += "\\TE{" + latexFragment(s.frag) + "}";
    } else {
      out += "\\TE[" + latexVar(s.var) + "]{" + latexFragment(s.frag) + "}";
    }
  }
  return out;
}

std::string latexConclusion(const Rule& r) {
  std::string out = "\\texttt{" + latexEscape(r.head) + "}";
  for (const auto& p : r.argPats) out += "\\{" + latexFragment(p) + "\\}";
  return out;
}

void renderLatexRec(const Rule& r, int indent, std::string& out) {
  std::string pad(static_cast<size_t>(indent), ' ');
  if (r.memo) {
    out += pad + "...";
    return;
  }
  out += pad + "\\Rule[{\\presume{";
  if (!r.presumptions.empty()) {
    out += "\n";
    for (size_t i = 0; i < r.presumptions.size(); ++i) {
      renderLatexRec(*r.presumptions[i], indent + 2, out);
      if (i + 1 < r.presumptions.size()) out += "\\\\";
      out += "\n";
    }
    out += pad;
  }
  out += "}}]{" + latexConclusion(r) + "}{" + latexChain(r) + "}";
}

}  // namespace

std::string render(const RulePtr& r, RuleFormat fmt) {
  std::string out;
  if (fmt == RuleFormat::Text) {
    renderTextRec(*r, 0, out);
  } else {
    renderLatexRec(*r, 0, out);
    out += "\n";
  }
  return out;
}

}  // namespace howard
