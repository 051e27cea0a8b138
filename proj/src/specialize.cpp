#include "specialize.hpp"

#include <set>

#include "printer.hpp"

namespace howard {

namespace {

bool appliesName(const ExprPtr& e, const std::string& name) {
  switch (e->kind) {
    case Expr::Kind::Apply:
      if (!e->qualifier && e->op == name) return true;
      for (const auto& a : e->args) {
        if (a.isValueList) {
          for (const auto& it : a.items)
            if (appliesName(it, name)) return true;
        } else if (appliesName(a.body, name)) {
          return true;
        }
      }
      return false;
    case Expr::Kind::Seq:
    case Expr::Kind::ListLit:
      for (const auto& it : e->items)
        if (appliesName(it, name)) return true;
      return false;
    case Expr::Kind::Infix:
      return appliesName(e->lhs, name) || appliesName(e->rhs, name);
    case Expr::Kind::Def:
      return appliesName(e->defBody, name) || appliesName(e->appBody, name);
    default:
      return false;
  }
}

struct Ctx {
  FreshNames fresh;
  SpecializationTrace* trace;
  int depth = 0;
};

// Reduces the rule's meaning chain symbolically (unknown-context binds stay
// put), then turns every presumption instance still in scope of a remaining
// bind into a recursively reduced presumption of the result.
RulePtr specializeRule(const RulePtr& inst, RuleEnv baseEnv, Ctx& cx) {
  if (++cx.depth > 64)
    throw Error(ErrorKind::NonEliminable,
                "presumption nesting did not bottom out for '" + inst->head +
                    "'");

  RuleEnv env = baseEnv;
  for (const auto& p : inst->presumptions) env = envPush(env, p);

  Chain c;
  for (ChainStep s : inst->meaning) {
    cx.fresh.reserve(s.var);
    if (s.kind == ChainStep::Kind::Bind) s.env = env;
    c.steps.push_back(std::move(s));
  }
  long fuel = 100000;
  while (step(c, cx.fresh))
    if (--fuel < 0)
      throw Error(ErrorKind::FuelExhausted, "specialisation fuel exhausted");

  // Presumption instances spawned above `env` and still visible from a
  // remaining bind are the rules future applications will need.
  std::vector<std::pair<RulePtr, RuleEnv>> found;
  std::set<const Rule*> seen;
  for (const auto& s : c.steps) {
    if (s.kind != ChainStep::Kind::Bind) continue;
    std::vector<std::pair<RulePtr, RuleEnv>> here;
    for (RuleEnv n = s.env; n && n != env; n = n->parent)
      if (seen.insert(n->rule.get()).second) here.push_back({n->rule, s.env});
    // env lists are newest-first; keep generation order
    found.insert(found.end(), here.rbegin(), here.rend());
  }

  auto out = std::make_shared<Rule>();
  out->head = inst->head;
  out->argPats = inst->argPats;
  out->resultVar = inst->resultVar;
  for (ChainStep s : c.steps) {
    s.env = nullptr;
    out->meaning.push_back(std::move(s));
  }
  for (const auto& [p, penv] : found)
    out->presumptions.push_back(specializeRule(p, penv, cx));
  --cx.depth;
  return out;
}

}  // namespace

bool mentionsDefiningContext(const RulePtr& r) {
  auto fragD = [](const Fragment& f) {
    return f.kind == Fragment::Kind::Unknown && f.ctx == 'D';
  };
  for (const auto& p : r->argPats)
    if (fragD(p)) return true;
  for (const auto& s : r->meaning)
    if (s.kind == ChainStep::Kind::Bind && fragD(s.frag)) return true;
  for (const auto& p : r->presumptions)
    if (mentionsDefiningContext(p)) return true;
  return false;
}

std::pair<RulePtr, SpecializationTrace> specialize(const SigPtr& sig,
                                                   const ExprPtr& defBody,
                                                   unsigned seed) {
  if (appliesName(defBody, sig->name))
    throw Error(ErrorKind::NonEliminable,
                "'" + sig->name +
                    "' is recursive; its defining-context reference cannot "
                    "be eliminated",
                sig->pos);

  RulePtr scheme = defscheme_cbv(sig);
  RulePtr appRule = scheme->presumptions.at(0);
  Bindings b;
  b[{'D', sig->name}] = concreteFrag(defBody);
  RulePtr inst = instantiate(appRule, b);

  SpecializationTrace trace;
  trace.entries.push_back({"instantiated scheme", inst});

  Ctx cx{FreshNames(seed), &trace};
  RulePtr final_ = specializeRule(inst, nullptr, cx);
  trace.entries.push_back({"specialized rule", final_});

  if (mentionsDefiningContext(final_))
    throw Error(ErrorKind::NonEliminable,
                "a defining-context reference survives in the rule for '" +
                    sig->name + "'",
                sig->pos);
  return {final_, trace};
}

MathPtr reduce_application(const RulePtr& r, const ExprPtr& call,
                           const ReduceOptions& opts) {
  RuleEnv env = envPush(nullptr, r);
  for (const auto& p : r->presumptions) env = envPush(env, p);
  Chain c;
  c.steps.push_back(bindStep(r->resultVar, concreteFrag(call), env));
  c.terminal = mHole(r->resultVar);
  return reduceChain(std::move(c), opts);
}

}  // namespace howard
