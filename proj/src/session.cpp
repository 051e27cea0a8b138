#include "session.hpp"

#include <utility>

#include "desugar.hpp"
#include "lexer.hpp"
#include "parser.hpp"
#include "printer.hpp"
#include "typeinfer.hpp"

namespace howard {

namespace {

ExprPtr mkSeqOf(ExprPtr item) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Seq;
  e->braced = true;
  e->pos = item->pos;
  e->items = {std::move(item)};
  return e;
}

// A unit is complete when it lexes with balanced groups.
bool isComplete(const std::string& src) {
  std::vector<Token> toks;
  try {
    toks = tokenize(src);
  } catch (const Error&) {
    return false;  // e.g. string still open
  }
  int depth = 0;
  for (const auto& t : toks) {
    switch (t.kind) {
      case Tok::LBrace:
      case Tok::LBrack:
      case Tok::LParen:
        ++depth;
        break;
      case Tok::RBrace:
      case Tok::RBrack:
      case Tok::RParen:
        --depth;
        break;
      default:
        break;
    }
  }
  return depth <= 0;
}

bool isBlank(const std::string& src) {
  std::vector<Token> toks;
  try {
    toks = tokenize(src);
  } catch (const Error&) {
    return false;
  }
  return toks.empty() || toks[0].kind == Tok::End;
}

// True for inputs consisting only of definitions without application bodies
// (declaration-style `DEF ... ;` at the end of the unit).
bool isPureDefinition(const ExprPtr& raw) {
  if (raw->kind == Expr::Kind::Def)
    return !raw->appBody || isPureDefinition(raw->appBody);
  if (raw->kind == Expr::Kind::Seq) {
    if (raw->items.empty()) return true;
    for (size_t i = 0; i + 1 < raw->items.size(); ++i)
      if (raw->items[i]->kind != Expr::Kind::Def ||
          (raw->items[i]->appBody &&
           !isPureDefinition(raw->items[i]->appBody)))
        return false;
    return isPureDefinition(raw->items.back());
  }
  return false;
}

const Expr* findApply(const ExprPtr& e, const std::string& name);

const Expr* findApplyInArgs(const std::vector<Arg>& args,
                            const std::string& name) {
  for (const auto& a : args) {
    if (a.body)
      if (const Expr* f = findApply(a.body, name)) return f;
    for (const auto& it : a.items)
      if (const Expr* f = findApply(it, name)) return f;
  }
  return nullptr;
}

const Expr* findApply(const ExprPtr& e, const std::string& name) {
  if (!e) return nullptr;
  switch (e->kind) {
    case Expr::Kind::Apply:
      if (!e->qualifier && e->op == name) return e.get();
      return findApplyInArgs(e->args, name);
    case Expr::Kind::Seq:
    case Expr::Kind::ListLit:
      for (const auto& m : e->items)
        if (const Expr* f = findApply(m, name)) return f;
      return nullptr;
    case Expr::Kind::Infix:
      if (const Expr* f = findApply(e->lhs, name)) return f;
      return findApply(e->rhs, name);
    case Expr::Kind::Def:
      if (const Expr* f = findApply(e->defBody, name)) return f;
      return findApply(e->appBody, name);
    default:
      return nullptr;
  }
}

}  // namespace

Session::Session() : lib_(makeStdlib()) {
  writer_ = [](const std::string&) {};
}

void Session::registerDefs(const ExprPtr& core) { registerDefsIn(core, core); }

void Session::registerDefsIn(const ExprPtr& e, const ExprPtr& root) {
  if (!e) return;
  switch (e->kind) {
    case Expr::Kind::Def: {
      DefRecord rec;
      rec.sig = e->sig;
      rec.defBody = e->defBody;
      rec.applySite = findApply(e->appBody, e->sig->name);
      rec.root = root;
      defs_[e->sig->name] = std::move(rec);
      registerDefsIn(e->defBody, root);
      registerDefsIn(e->appBody, root);
      return;
    }
    case Expr::Kind::Seq:
    case Expr::Kind::ListLit:
      for (const auto& m : e->items) registerDefsIn(m, root);
      return;
    case Expr::Kind::Infix:
      registerDefsIn(e->lhs, root);
      registerDefsIn(e->rhs, root);
      return;
    case Expr::Kind::Apply:
      for (const auto& a : e->args) {
        if (a.body) registerDefsIn(a.body, root);
        for (const auto& it : a.items) registerDefsIn(it, root);
      }
      return;
    default:
      return;
  }
}

ExprPtr Session::compile(const std::string& source) {
  ExprPtr raw = parseProgram(source);
  ExprPtr core = desugarProgram(raw, lib_.sigs);
  infer(core, lib_.types);
  registerDefs(core);
  return core;
}

void Session::load(const std::string& source) { compile(source); }

RtPtr Session::runSource(const std::string& source) {
  ExprPtr core = compile(source);
  store_.fuel = fuel_;
  store_.sink = [this](const std::string& s) { writer_(s); };
  store_.interpret = [this](const Expr& site, const RtEnv& env) {
    return interpretHook(site, env);
  };
  return eval(core, lib_.runtime, store_);
}

std::string Session::check(const std::string& source, bool dumpTypes) {
  ExprPtr raw = parseProgram(source);
  ExprPtr core = desugarProgram(raw, lib_.sigs);
  InferResult r = infer(core, lib_.types, dumpTypes);
  if (!dumpTypes) return renderType(r.type);
  std::string out;
  for (const auto& line : r.dump) {
    if (!out.empty()) out += "\n";
    out += line;
  }
  return out;
}

std::string Session::defruleText(const std::string& name, bool latex) {
  SigPtr sig;
  if (auto it = defs_.find(name); it != defs_.end())
    sig = it->second.sig;
  else
    sig = stdlibSignature(name);
  if (!sig)
    throw Error(ErrorKind::UnknownOperation,
                "no operation named '" + name + "' is loaded");
  RulePtr rule;
  try {
    rule = defscheme(sig);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedSignature) throw;
    rule = defscheme_cbv(sig);
  }
  std::string out = printSignature(sig) + "\n\n";
  out += render(rule, latex ? RuleFormat::Latex : RuleFormat::Text);
  if (out.empty() || out.back() != '\n') out += "\n";
  return out;
}

std::string Session::specializeText(const std::string& name,
                                    const std::string& callExpr) {
  auto it = defs_.find(name);
  if (it == defs_.end())
    throw Error(ErrorKind::UnknownOperation,
                "no definition of '" + name + "' is loaded");
  auto [rule, trace] = specialize(it->second.sig, it->second.defBody, seed_);
  std::string out;
  for (const auto& entry : trace.entries) {
    out += entry.caption + "\n";
    out += render(entry.rule, RuleFormat::Text);
    if (out.back() != '\n') out += "\n";
    out += "\n";
  }
  if (trace.entries.empty() || !ruleEquals(trace.entries.back().rule, rule)) {
    out += "final rule\n" + render(rule, RuleFormat::Text);
    if (out.back() != '\n') out += "\n";
  }

  if (!callExpr.empty()) {
    if (!it->second.applySite)
      throw Error(ErrorKind::UnknownOperation,
                  "'" + name + "' is never applied in the loaded source");
    ExprPtr call = parseExpression(callExpr);
    auto site = std::make_shared<Expr>(*it->second.applySite);
    bool replaced = false;
    for (size_t k = site->args.size(); k-- > 0;) {
      if (!site->args[k].isValueList) {
        site->args[k].body = mkSeqOf(call);
        replaced = true;
        break;
      }
    }
    if (!replaced)
      throw Error(ErrorKind::UnsupportedSignature,
                  "'" + name + "' has no application-context argument");
    ReduceOptions opts;
    opts.seed = seed_;
    opts.fold = false;
    MathPtr m = reduce_application(rule, site, opts);
    MathPtr folded = mathFold(m);
    out += "\n" + renderMath(m);
    if (!mathEquals(m, folded)) out += " = " + renderMath(folded);
    out += "\n";
  }
  return out;
}

std::string Session::promptFor(int depth, int n) const {
  std::string p(static_cast<size_t>(depth), '.');
  if (depth > 0) p += " ";
  return p + std::to_string(n) + "> ";
}

std::optional<std::string> Session::readUnit(int depth) {
  if (!reader_) return std::nullopt;
  if (lineCounters_.size() <= static_cast<size_t>(depth))
    lineCounters_.resize(depth + 1, 0);
  std::string acc;
  while (true) {
    writer_(promptFor(depth, ++lineCounters_[depth]));
    auto line = reader_();
    if (!line) {
      // end of input: deeper levels restart their numbering next time
      lineCounters_.resize(depth);
      return std::nullopt;
    }
    acc += *line + "\n";
    if (isBlank(acc)) {
      acc.clear();
      --lineCounters_[depth];
      continue;
    }
    if (isComplete(acc)) return acc;
  }
}

std::optional<RtPtr> Session::interpretHook(const Expr& site,
                                            const RtEnv& env) {
  int depth = ++depth_;
  auto input = readUnit(depth);
  --depth_;
  if (!input) return std::nullopt;

  SigEnv sigs = lib_.sigs;
  if (auto note = std::static_pointer_cast<ScopeNote>(site.scopeNote))
    sigs = note->env;
  TEnv types = lib_.types;
  if (auto tn = std::static_pointer_cast<TEnv>(site.typeNote)) types = *tn;

  try {
    ExprPtr raw = parseProgram(*input);
    ExprPtr core = desugarProgram(raw, sigs);
    infer(core, types);
    registerDefs(core);
    RtPtr v = eval(core, env, store_);
    std::string shown = renderValue(v);
    if (!shown.empty()) writer_(shown + "\n");
    return v;
  } catch (const EofSignal&) {
    throw;
  } catch (const Error& e) {
    writer_(std::string(e.what()) + "\n");
    return rtUnit();
  }
}

void Session::repl(const std::string& startupSource) {
  store_.fuel = fuel_;
  store_.sink = [this](const std::string& s) { writer_(s); };
  store_.interpret = [this](const Expr& site, const RtEnv& env) {
    return interpretHook(site, env);
  };

  if (!startupSource.empty()) {
    try {
      ExprPtr core = compile(startupSource);
      RtPtr v = eval(core, lib_.runtime, store_);
      std::string shown = renderValue(v);
      if (!shown.empty()) writer_(shown + "\n");
    } catch (const Error& e) {
      writer_(std::string(e.what()) + "\n");
    }
  }

  while (true) {
    auto input = readUnit(0);
    if (!input) break;
    store_.fuel = fuel_;
    try {
      ExprPtr raw = parseProgram(*input);
      bool pureDef = isPureDefinition(raw);
      // a pure definition needs an application body to compile; give it an
      // empty one and remember the definition for later inputs
      std::string src = defPrefix_ + *input + (pureDef ? "\n{}" : "");
      ExprPtr full = compile(src);
      RtPtr v = eval(full, lib_.runtime, store_);
      std::string shown = renderValue(v);
      if (!shown.empty()) writer_(shown + "\n");
      if (pureDef) defPrefix_ += *input + "\n";
    } catch (const Error& e) {
      writer_(std::string(e.what()) + "\n");
    }
  }
}

}  // namespace howard
