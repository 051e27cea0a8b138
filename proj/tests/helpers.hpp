#pragma once

#include <deque>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "desugar.hpp"
#include "eval.hpp"
#include "lambda.hpp"
#include "parser.hpp"
#include "rules.hpp"
#include "session.hpp"
#include "stdlib.hpp"
#include "typeinfer.hpp"

namespace testutil {

inline const howard::Stdlib& lib() {
  static howard::Stdlib s = howard::makeStdlib();
  return s;
}

inline std::string readGolden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return in ? ss.str() : std::string();
}

struct RunOut {
  howard::RtPtr value;
  std::vector<std::string> effects;
  std::string printed;
};

// Full pipeline on one source: parse, desugar, typecheck, evaluate.
inline RunOut runProgram(const std::string& src) {
  auto core = howard::desugarProgram(howard::parseProgram(src), lib().sigs);
  howard::infer(core, lib().types);
  howard::Store st;
  RunOut out;
  st.sink = [&](const std::string& s) { out.printed += s; };
  out.value = eval(core, lib().runtime, st);
  out.effects = st.effects;
  return out;
}

inline long long evalInt(const std::string& src) {
  auto out = runProgram(src);
  if (out.value->kind != howard::RtValue::Kind::Int)
    throw std::runtime_error("not an integer result: " +
                             howard::renderValue(out.value));
  return out.value->i;
}

// Translation to a lambda term plus leftmost-outermost normalization;
// only the pure by-name fragment is accepted.
inline howard::TermPtr lambdaNormal(const std::string& src) {
  auto core = howard::desugarProgram(howard::parseProgram(src), lib().sigs);
  howard::NameSupply ns;
  return howard::normalize(howard::translate(core, lib().sigs, ns));
}

inline long long lambdaInt(const std::string& src) {
  auto t = lambdaNormal(src);
  if (t->kind != howard::Term::Kind::Num)
    throw std::runtime_error("lambda normal form is not a number: " +
                             howard::dumpTerm(t));
  return t->num;
}

// Rule-based derivation of the whole program to a mathematical expression.
inline howard::MathPtr rulesValue(const std::string& src,
                                  std::vector<std::string>* trace = nullptr) {
  auto core = howard::desugarProgram(howard::parseProgram(src), lib().sigs);
  howard::ReduceOptions opts;
  opts.trace = trace;
  return howard::reduceProgram(core, nullptr, opts);
}

inline long long rulesInt(const std::string& src) {
  auto m = rulesValue(src);
  if (m->kind != howard::MathExpr::Kind::Num)
    throw std::runtime_error("derivation result is not a number: " +
                             howard::renderMath(m));
  return m->num;
}

// Interactive session over canned input; returns the full transcript
// (prompts, echoes of nothing — input lines are not echoed — and output).
inline std::string replTranscript(const std::string& startup,
                                  std::deque<std::string> inputs) {
  howard::Session s;
  std::string out;
  s.setWriter([&](const std::string& x) { out += x; });
  s.setReader([&]() -> std::optional<std::string> {
    if (inputs.empty()) return std::nullopt;
    auto l = inputs.front();
    inputs.pop_front();
    return l;
  });
  s.repl(startup);
  return out;
}

// The worked examples shared across suites.
inline const char* kDefR =
    "DEF r OF T [D[x:int]:int] [A[f[X:int]:int]:T]: T {A{D{X*2}}} "
    "{r{x*x}{f{3}}}";

inline const char* kTwiceByNameSig =
    "twice OF W [F[x:int]:int] [Return[f[X:int]:int] :W]:W";
inline const char* kTwiceByValueSig =
    "twice OF W [F(x:int):int] [Return[f(X:int):int] :W] : W";

inline const char* kTwiceByName =
    "DEF twice OF W [F[x:int]:int] [Return[f[X:int]:int] :W]:W \n"
    "  { Return{F{F{X}}} }\n"
    "  { twice{x*x}\n"
    "    {loop{INTERPRET}}\n"
    "  }\n";
inline const char* kTwiceByValue =
    "DEF twice OF W [F(x:int):int] [Return[f(X:int):int] :W] : W\n"
    "  { Return{with(X) u; F{F{u}}} }\n"
    "  { twice{x*x}\n"
    "    {loop{INTERPRET}}\n"
    "  }\n";
// Same by-value signature with a pure defining body, usable by the
// symbolic derivation paths (the staged body above needs the evaluator).
inline const char* kTwiceByValuePlain =
    "DEF twice OF W [F(x:int):int] [Return[f(X:int):int] :W] : W\n"
    "  { Return{F{F{X}}} }\n"
    "  { twice{x*x} {f{2}} }\n";

inline const char* kStepInput =
    "{var t; t:=0; f{stdout << ~\"Step \" << t:=t+1 << nl; 2} };";

// Same definitions with a direct call instead of the interactive loop.
inline std::string twiceByNameCall(const std::string& call) {
  return "DEF twice OF W [F[x:int]:int] [Return[f[X:int]:int] :W]:W "
         "{ Return{F{F{X}}} } { twice{x*x} {" +
         call + "} }";
}

}  // namespace testutil
