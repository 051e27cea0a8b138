#pragma once

// Hand-built expected rule trees for the worked examples, constructed
// node by node (independently of the scheme generator) so the generator's
// output can be compared structurally.

#include <memory>
#include <string>
#include <vector>

#include "rules.hpp"

namespace testutil {

inline howard::RulePtr mkRule(std::string head,
                              std::vector<howard::Fragment> args,
                              std::vector<howard::ChainStep> meaning,
                              std::vector<howard::RulePtr> presumptions = {}) {
  auto r = std::make_shared<howard::Rule>();
  r->head = std::move(head);
  r->argPats = std::move(args);
  r->resultVar = "θ";
  r->meaning = std::move(meaning);
  r->presumptions = std::move(presumptions);
  return r;
}

// Leaf: name ⟶ T_θ⟨ctx⟨name⟩⟩ (a parameter with no sub-parameters).
inline howard::RulePtr leafRule(const std::string& name, char ctx) {
  using namespace howard;
  return mkRule(name, {}, {bindStep("θ", unknownFrag(ctx, name))});
}

// r OF T [D[x:int]:int] [A[f[X:int]:int]:T] : T
inline howard::RulePtr expectedSchemeR() {
  using namespace howard;
  auto rX = leafRule("X", 'E');
  auto rf = mkRule("f", {unknownFrag('E', "X")},
                   {bindStep("θ", unknownFrag('D', "f"))}, {rX});
  auto rA = mkRule("A", {unknownFrag('D', "f")},
                   {bindStep("θ", unknownFrag('E', "A"))}, {rf});
  auto rx = leafRule("x", 'D');
  auto rD = mkRule("D", {unknownFrag('D', "x")},
                   {bindStep("θ", unknownFrag('E', "D"))}, {rx});
  auto rr = mkRule("r", {unknownFrag('E', "D"), unknownFrag('E', "A")},
                   {bindStep("θ", unknownFrag('D', "r"))}, {rD, rA});
  return mkRule("DEF r", {unknownFrag('D', "r"), unknownFrag('E', "r")},
                {bindStep("θ", unknownFrag('E', "r"))}, {rr});
}

// twice OF W [F[x:int]:int] [Return[f[X:int]:int] : W] : W
inline howard::RulePtr expectedSchemeTwiceByName() {
  using namespace howard;
  auto rX = leafRule("X", 'E');
  auto rf = mkRule("f", {unknownFrag('E', "X")},
                   {bindStep("θ", unknownFrag('D', "f"))}, {rX});
  auto rReturn = mkRule("Return", {unknownFrag('D', "f")},
                        {bindStep("θ", unknownFrag('E', "Return"))}, {rf});
  auto rx = leafRule("x", 'D');
  auto rF = mkRule("F", {unknownFrag('D', "x")},
                   {bindStep("θ", unknownFrag('E', "F"))}, {rx});
  auto rTwice =
      mkRule("twice", {unknownFrag('E', "F"), unknownFrag('E', "Return")},
             {bindStep("θ", unknownFrag('D', "twice"))}, {rF, rReturn});
  return mkRule("DEF twice",
                {unknownFrag('D', "twice"), unknownFrag('E', "twice")},
                {bindStep("θ", unknownFrag('E', "twice"))}, {rTwice});
}

// twice OF W [F(x:int):int] [Return[f(X:int):int] : W] : W — by-value slots
// bind the operand to a fresh name once and substitute it for the parameter.
inline howard::RulePtr expectedSchemeTwiceByValue() {
  using namespace howard;
  auto rf = mkRule("f", {unknownFrag('E', "X")},
                   {bindStep("η1", unknownFrag('E', "X")),
                    substStep("X", mHole("η1")),
                    bindStep("θ", unknownFrag('D', "f"))});
  auto rReturn = mkRule("Return", {unknownFrag('D', "f")},
                        {bindStep("θ", unknownFrag('E', "Return"))}, {rf});
  auto rF = mkRule("F", {unknownFrag('D', "x")},
                   {bindStep("η1", unknownFrag('D', "x")),
                    substStep("x", mHole("η1")),
                    bindStep("θ", unknownFrag('E', "F"))});
  auto rTwice =
      mkRule("twice", {unknownFrag('E', "F"), unknownFrag('E', "Return")},
             {bindStep("θ", unknownFrag('D', "twice"))}, {rF, rReturn});
  return mkRule("DEF twice",
                {unknownFrag('D', "twice"), unknownFrag('E', "twice")},
                {bindStep("θ", unknownFrag('E', "twice"))}, {rTwice});
}

}  // namespace testutil
