#include "stdlib.hpp"

#include <algorithm>
#include <map>

#include "parser.hpp"

namespace howard {

namespace {

const std::vector<std::pair<std::string, std::string>>& signatureTexts() {
  static const std::vector<std::pair<std::string, std::string>> texts = {
      {"program", "program OF W [Body:W] : W"},
      {"var",
       "var OF w, rvalue [Scope OF lvalue"
       " (__:lvalue)"
       " [_:rvalue]"
       " [:=(lvalue,rvalue) : rvalue]:w]:w"},
      {"with", "with OF T,W (X:T) [Body(__:T):W] : W"},
      {"if", "if OF T (c:int) [Then:T] [Else:T] : T"},
      {"while", "while OF W [Cond:int] [Body:W] : void"},
      {"induction",
       "induction OF Problem, Result"
       " [Initial:Problem]"
       " [Break_down[__:Problem]"
       "   [result[Sub:Problem]:Result]:Result]:Result"},
      {"split_list",
       "split_list OF T,W [l: T List] [Empty:W]"
       " [Cons[hd:T][tl:T List]:W] : W"},
      {"nil", "nil OF T : T List"},
      {"stdout", "stdout : Output"},
      {"nl", "nl : string"},
      {"sort",
       "sort OF T,W"
       " [ InOrder [x:T][y:T]:int ]"
       " [ Send [put[X:T]] ]"
       " [ Receive [all[Body[x:T]]]:W] :W"},
      {"loop", "loop OF W [Body:W] : void"},
      {"INTERPRET", "INTERPRET OF W : W"},
      {"unix",
       "unix"
       " [Members OF PIPE, PID"
       "  [newpipe:PIPE]"
       "  [child[Init[exec(arg:string Array)]]:PID]"
       "  [mk_stdin(x:PIPE)]"
       "  [mk_n(x:PIPE)]"
       "  [mk_stderr(x:PIPE)]"
       "  [source OF W"
       "   (x:PIPE)"
       "   [Access(in:Input, __:Input):W]:W]"
       "  [dest OF W"
       "   (x:PIPE)"
       "   [Access(out:Output, __:Output):W]:W]"
       "  [close(x:PIPE)]"
       "  [kill(p:PID)]"
       "  [await(id:PID):int]"
       "  [await_all]"
       "  [run(Cmd:string Array)"
       "   [Con OF IO"
       "    [<(NONE,string) : IO]"
       "    [>(NONE,string) : IO]"
       "    [>>(NONE,string) : IO]"
       "    [<(NONE,PIPE) : IO]"
       "    [>(NONE,PIPE) : IO]"
       "    [<(NONE,Input) : IO]"
       "    [>(NONE,Output) : IO]:IO List]]]"},
  };
  return texts;
}

const std::map<std::string, SigPtr>& sigTable() {
  static const std::map<std::string, SigPtr> table = [] {
    std::map<std::string, SigPtr> t;
    for (const auto& [name, text] : signatureTexts())
      t.emplace(name, parseSignature(text));
    return t;
  }();
  return table;
}

SigPtr sigOf(const std::string& name) { return sigTable().at(name); }

CallablePtr closureFromArg(SigPtr paramSig, const Arg& a, RtEnv env) {
  auto c = std::make_shared<Callable>();
  c->impl = Callable::Impl::ByNameArg;
  c->sig = std::move(paramSig);
  c->body = a.body;
  c->env = std::move(env);
  c->label = a.label;
  return c;
}

bool truthyValue(const RtPtr& v, SourcePos pos) {
  if (v->kind == RtValue::Kind::Bool) return v->b;
  if (v->kind == RtValue::Kind::Int) return v->i != 0;
  throw Error(ErrorKind::RuntimeTypeError,
              "expected a condition value, got " + renderValue(v), pos);
}

ExprPtr mkApply(std::string name, std::vector<Arg> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Apply;
  e->op = std::move(name);
  e->args = std::move(args);
  return e;
}

// --- in-language bodies for the definable operations ----------------------

// program's body: apply its sole by-name parameter.
ExprPtr programBody() { return mkApply("Body"); }

// with's body: pass the (already evaluated) value parameter to Body's
// by-value member slot.
ExprPtr withBody() {
  Arg a;
  a.isValueList = true;
  a.items = {mkApply("X")};
  return mkApply("Body", {std::move(a)});
}

// --- intrinsics ------------------------------------------------------------

RtPtr varIntrinsic(const Expr& site, const RtEnv& env, Store& st) {
  SigPtr scopeSig = sigOf("var")->params[0].byName;
  SigPtr lvSig = scopeSig->params[0].byValue[0];  // __
  SigPtr rvSig = scopeSig->params[1].byName;      // _
  int idx = static_cast<int>(st.cells.size());
  st.cells.emplace_back();
  auto cellV = std::make_shared<RtValue>();
  cellV->kind = RtValue::Kind::Cell;
  cellV->cell = idx;
  SourcePos pos = site.pos;
  auto read = intrinsicCallable(
      rvSig, [idx, pos](const Expr&, const RtEnv&, Store& st2) -> RtPtr {
        const auto& c = st2.cells.at(idx);
        if (!c)
          throw Error(ErrorKind::UninitializedVariable,
                      "variable read before first assignment", pos);
        return *c;
      });
  auto scope = closureFromArg(scopeSig, site.args.at(0), env);
  return invokeClosure(scope,
                       {{"__", memoCallable(lvSig, cellV)}, {"_", read}}, st);
}

RtPtr ifIntrinsic(const Expr& site, const RtEnv& env, Store& st) {
  SigPtr s = sigOf("if");
  RtPtr c = eval(site.args.at(0).items.at(0), env, st);
  bool t = truthyValue(c, site.pos);
  SigPtr branchSig = t ? s->params[1].byName : s->params[2].byName;
  const Arg& branch = t ? site.args.at(1) : site.args.at(2);
  return invokeClosure(closureFromArg(branchSig, branch, env), {}, st);
}

RtPtr whileIntrinsic(const Expr& site, const RtEnv& env, Store& st) {
  SigPtr s = sigOf("while");
  auto cond = closureFromArg(s->params[0].byName, site.args.at(0), env);
  auto body = closureFromArg(s->params[1].byName, site.args.at(1), env);
  while (truthyValue(invokeClosure(cond, {}, st), site.pos)) {
    st.burn(site.pos);
    invokeClosure(body, {}, st);
  }
  return rtUnit();
}

RtPtr inductionIntrinsic(const Expr& site, const RtEnv& env, Store& st) {
  SigPtr s = sigOf("induction");
  SigPtr initSig = s->params[0].byName;
  SigPtr breakSig = s->params[1].byName;
  SigPtr resultSig = breakSig->params[1].byName;
  SigPtr subSig = resultSig->params[0].byName;

  Arg breakArg = site.args.at(1);
  auto run = std::make_shared<std::function<RtPtr(CallablePtr, Store&)>>();
  *run = [=](CallablePtr problem, Store& st2) -> RtPtr {
    auto result = intrinsicCallable(
        resultSig,
        [=](const Expr& s2, const RtEnv& env2, Store& st3) -> RtPtr {
          return (*run)(closureFromArg(subSig, s2.args.at(0), env2), st3);
        });
    auto breakdown = closureFromArg(breakSig, breakArg, env);
    return invokeClosure(breakdown, {{"__", problem}, {"result", result}},
                         st2);
  };
  return (*run)(closureFromArg(initSig, site.args.at(0), env), st);
}

RtPtr splitListIntrinsic(const Expr& site, const RtEnv& env, Store& st) {
  SigPtr s = sigOf("split_list");
  SigPtr consSig = s->params[2].byName;
  RtPtr l = invokeClosure(
      closureFromArg(s->params[0].byName, site.args.at(0), env), {}, st);
  if (l->kind != RtValue::Kind::List)
    throw Error(ErrorKind::RuntimeTypeError,
                "split_list expects a list, got " + renderValue(l), site.pos);
  if (l->list.empty())
    return invokeClosure(
        closureFromArg(s->params[1].byName, site.args.at(1), env), {}, st);
  RtPtr hd = l->list.front();
  RtPtr tl = rtList({l->list.begin() + 1, l->list.end()});
  return invokeClosure(
      closureFromArg(consSig, site.args.at(2), env),
      {{"hd", memoCallable(consSig->params[0].byName, hd)},
       {"tl", memoCallable(consSig->params[1].byName, tl)}},
      st);
}

RtPtr sortIntrinsic(const Expr& site, const RtEnv& env, Store& st) {
  SigPtr s = sigOf("sort");
  SigPtr inOrderSig = s->params[0].byName;
  SigPtr sendSig = s->params[1].byName;
  SigPtr putSig = sendSig->params[0].byName;
  SigPtr recvSig = s->params[2].byName;
  SigPtr allSig = recvSig->params[0].byName;
  SigPtr bodySig = allSig->params[0].byName;
  SigPtr xSig = inOrderSig->params[0].byName;
  SigPtr ySig = inOrderSig->params[1].byName;
  SigPtr putXSig = putSig->params[0].byName;
  SigPtr allXSig = bodySig->params[0].byName;

  auto elems = std::make_shared<std::vector<RtPtr>>();
  auto put = intrinsicCallable(
      putSig, [=](const Expr& s2, const RtEnv& env2, Store& st2) -> RtPtr {
        elems->push_back(invokeClosure(
            closureFromArg(putXSig, s2.args.at(0), env2), {}, st2));
        return rtUnit();
      });
  invokeClosure(closureFromArg(sendSig, site.args.at(1), env), {{"put", put}},
                st);

  auto inOrder = closureFromArg(inOrderSig, site.args.at(0), env);
  SourcePos pos = site.pos;
  std::stable_sort(elems->begin(), elems->end(),
                   [&](const RtPtr& a, const RtPtr& b) {
                     RtPtr v = invokeClosure(inOrder,
                                             {{"x", memoCallable(xSig, a)},
                                              {"y", memoCallable(ySig, b)}},
                                             st);
                     return truthyValue(v, pos);
                   });

  auto all = intrinsicCallable(
      allSig, [=](const Expr& s2, const RtEnv& env2, Store& st2) -> RtPtr {
        auto body = closureFromArg(bodySig, s2.args.at(0), env2);
        for (const auto& v : *elems)
          invokeClosure(body, {{"x", memoCallable(allXSig, v)}}, st2);
        return rtUnit();
      });
  return invokeClosure(closureFromArg(recvSig, site.args.at(2), env),
                       {{"all", all}}, st);
}

RtPtr loopIntrinsic(const Expr& site, const RtEnv& env, Store& st) {
  auto body =
      closureFromArg(sigOf("loop")->params[0].byName, site.args.at(0), env);
  while (true) {
    st.burn(site.pos);
    try {
      invokeClosure(body, {}, st);
    } catch (const EofSignal&) {
      break;
    }
  }
  return rtUnit();
}

RtPtr interpretIntrinsic(const Expr& site, const RtEnv& env, Store& st) {
  if (!st.interpret)
    throw Error(ErrorKind::Unimplemented, "no interactive input source",
                site.pos);
  auto r = st.interpret(site, env);
  if (!r) throw EofSignal{};
  return *r;
}

}  // namespace

SigPtr stdlibSignature(const std::string& name) {
  auto it = sigTable().find(name);
  return it == sigTable().end() ? nullptr : it->second;
}

RulePtr inductionRule() { return defmac(sigOf("induction"), 'D', 'E'); }

Stdlib makeStdlib() {
  Stdlib lib;
  for (const auto& [name, sig] : sigTable()) {
    lib.sigs = lib.sigs.bind(name, sig);
    lib.types = lib.types.bind(name, sig);
  }

  RtEnv rt;
  auto intr = [&](const char* name,
                  RtPtr (*fn)(const Expr&, const RtEnv&, Store&)) {
    rt = rt.bind(name, intrinsicCallable(sigOf(name), fn));
  };
  rt = rt.bind("program", definedCallable(sigOf("program"), programBody(),
                                          RtEnv{}));
  rt = rt.bind("with", definedCallable(sigOf("with"), withBody(), RtEnv{}));
  intr("var", varIntrinsic);
  intr("if", ifIntrinsic);
  intr("while", whileIntrinsic);
  intr("induction", inductionIntrinsic);
  intr("split_list", splitListIntrinsic);
  intr("sort", sortIntrinsic);
  intr("loop", loopIntrinsic);
  intr("INTERPRET", interpretIntrinsic);
  rt = rt.bind("nil", intrinsicCallable(sigOf("nil"),
                                        [](const Expr&, const RtEnv&,
                                           Store&) { return rtList({}); }));
  rt = rt.bind("stdout",
               intrinsicCallable(sigOf("stdout"),
                                 [](const Expr&, const RtEnv&, Store&) {
                                   auto v = std::make_shared<RtValue>();
                                   v->kind = RtValue::Kind::Port;
                                   v->isOutput = true;
                                   return RtPtr(v);
                                 }));
  rt = rt.bind("nl", intrinsicCallable(sigOf("nl"),
                                       [](const Expr&, const RtEnv&, Store&) {
                                         return rtStr("\n");
                                       }));
  rt = rt.bind("unix",
               intrinsicCallable(
                   sigOf("unix"), [](const Expr& e, const RtEnv&,
                                     Store&) -> RtPtr {
                     throw Error(ErrorKind::Unimplemented,
                                 "'unix' is registered for its signature "
                                 "only",
                                 e.pos);
                   }));
  lib.runtime = rt;
  return lib;
}

}  // namespace howard
