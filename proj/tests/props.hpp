#pragma once

// Randomized and corpus-wide invariant checks, shared by the unit test
// suite and the acceptance runner. Each function returns true on success
// and appends a description of the first failure to *why otherwise.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "helpers.hpp"
#include "printer.hpp"
#include "specialize.hpp"

namespace testutil {

// --- (a) capture-avoiding substitution -------------------------------------

namespace detail {

inline howard::TermPtr randomTerm(std::mt19937& rng, int depth) {
  using namespace howard;
  static const std::vector<std::string> pool = {"a", "b", "c", "x", "y", "z"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
  switch (pick(rng)) {
    case 0:
      return mkVar(pool[rng() % pool.size()]);
    case 1:
      return mkNum(static_cast<std::int64_t>(rng() % 100));
    case 2:
      return mkLam(pool[rng() % pool.size()], randomTerm(rng, depth - 1));
    case 3:
      return mkApp(randomTerm(rng, depth - 1), randomTerm(rng, depth - 1));
    default:
      return mkOp(rng() % 2 ? "+" : "*", randomTerm(rng, depth - 1),
                  randomTerm(rng, depth - 1));
  }
}

inline std::string canonicalFreshNames(const std::string& text) {
  // Renumbers fresh-name tokens (η7, •3, ...) in order of first appearance,
  // so two derivations that differ only in counter offsets compare equal.
  std::vector<std::string> seen;
  std::string out;
  size_t i = 0;
  while (i < text.size()) {
    bool eta = text.compare(i, 2, "η") == 0;
    bool dot = text.compare(i, 3, "•") == 0;
    size_t mark = eta ? 2 : dot ? 3 : 0;
    size_t j = i + mark;
    if (mark && j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      std::string tok = text.substr(i, j - i);
      size_t idx = 0;
      for (; idx < seen.size(); ++idx)
        if (seen[idx] == tok) break;
      if (idx == seen.size()) seen.push_back(tok);
      out += text.substr(i, mark) + "#" + std::to_string(idx);
      i = j;
    } else {
      out += text[i];
      ++i;
    }
  }
  return out;
}

}  // namespace detail

inline bool propCaptureFreedom(int iters, unsigned seed, std::string* why) {
  using namespace howard;
  std::mt19937 rng(seed);
  static const std::vector<std::string> pool = {"a", "b", "c", "x", "y", "z"};
  for (int it = 0; it < iters; ++it) {
    TermPtr t = detail::randomTerm(rng, 4);
    TermPtr v = detail::randomTerm(rng, 3);
    std::string x = pool[rng() % pool.size()];
    TermPtr s = substitute(t, x, v);
    auto fvT = freeTermVars(t);
    auto fvS = freeTermVars(s);
    if (!fvT.count(x)) {
      if (!alphaEq(s, t)) {
        if (why) *why = "substituting for absent '" + x + "' changed " +
                        dumpTerm(t) + " into " + dumpTerm(s);
        return false;
      }
      continue;
    }
    auto fvV = freeTermVars(v);
    for (const auto& n : fvS) {
      bool allowed = (fvT.count(n) && n != x) || fvV.count(n);
      if (!allowed) {
        if (why) *why = "variable '" + n + "' appeared free in " + dumpTerm(s);
        return false;
      }
    }
    for (const auto& n : fvV) {
      if (!fvS.count(n)) {
        if (why) *why = "free variable '" + n +
                        "' of the replacement was captured in " + dumpTerm(s);
        return false;
      }
    }
  }
  return true;
}

// --- (b) effect counts under the two calling conventions -------------------

inline bool propEffectCounts(std::string* why) {
  auto countSteps = [](const RunOut& o) {
    int n = 0;
    for (const auto& f : o.effects)
      if (f.rfind("PRINT S", 0) == 0) ++n;
    return n;
  };
  for (int k = 0; k <= 5; ++k) {
    std::string body = "0";
    for (int i = 0; i < k; ++i) body = i == 0 ? "X" : body + "+X";
    std::string call = "{ f{stdout << ~\"S\" << nl; 2} }";
    std::string byName =
        "DEF g OF W [Return[f[X:int]:int]:W]:W { Return{" + body + "} } "
        "{ g " + call + " }";
    std::string byValue =
        "DEF g OF W [Return[f(X:int):int]:W]:W { Return{" + body + "} } "
        "{ g " + call + " }";
    int got = countSteps(runProgram(byName));
    if (got != k) {
      if (why) *why = "by-name with " + std::to_string(k) +
                      " references printed " + std::to_string(got) + " times";
      return false;
    }
    got = countSteps(runProgram(byValue));
    if (got != 1) {
      if (why) *why = "by-value with " + std::to_string(k) +
                      " references printed " + std::to_string(got) + " times";
      return false;
    }
  }
  return true;
}

// --- (c) the three execution paths agree on the pure corpus ----------------

inline bool propOracleTriangle(std::string* why) {
  for (const auto& entry : pureCorpus()) {
    long long ev, lm, rl;
    try {
      ev = evalInt(entry.src);
      lm = lambdaInt(entry.src);
      rl = rulesInt(entry.src);
    } catch (const std::exception& e) {
      if (why) *why = std::string(e.what()) + " on: " + entry.src;
      return false;
    }
    if (ev != entry.expected || lm != entry.expected || rl != entry.expected) {
      if (why)
        *why = "expected " + std::to_string(entry.expected) + " but got eval=" +
               std::to_string(ev) + " lambda=" + std::to_string(lm) +
               " rules=" + std::to_string(rl) + " on: " + entry.src;
      return false;
    }
  }
  return true;
}

// --- (d) parse/print round-trip ---------------------------------------------

inline bool propRoundTrip(std::string* why) {
  using namespace howard;
  for (const auto& entry : pureCorpus()) {
    std::string p1 = printExpr(parseProgram(entry.src));
    std::string p2 = printExpr(parseProgram(p1));
    if (p1 != p2) {
      if (why) *why = "printed form not a fixpoint for: " + entry.src;
      return false;
    }
  }
  for (const char* name : {"program", "var", "with", "if", "while",
                           "induction", "split_list", "sort", "unix"}) {
    SigPtr sig = stdlibSignature(name);
    if (!sig) {
      if (why) *why = std::string("missing signature '") + name + "'";
      return false;
    }
    std::string s1 = printSignature(sig);
    std::string s2 = printSignature(parseSignature(s1));
    if (s1 != s2) {
      if (why) *why = "signature print not a fixpoint for '" +
                      std::string(name) + "': " + s1 + " vs " + s2;
      return false;
    }
  }
  return true;
}

// --- (e) derivations are stable under fresh-name reseeding ------------------

inline bool propAlphaStability(std::string* why) {
  auto canonicalSpec = [](const char* program, unsigned seed) {
    howard::Session s;
    s.setSeed(seed);
    s.load(program);
    return detail::canonicalFreshNames(s.specializeText("twice", ""));
  };
  for (const char* program : {kTwiceByName, kTwiceByValuePlain}) {
    std::string base = canonicalSpec(program, 0);
    for (unsigned seed : {7u, 123u}) {
      std::string other = canonicalSpec(program, seed);
      if (other != base) {
        if (why) *why = "derivation changed shape under seed " +
                        std::to_string(seed) + ":\n" + base + "\nvs\n" + other;
        return false;
      }
    }
  }
  for (unsigned seed : {0u, 7u, 123u}) {
    howard::Session s;
    s.setSeed(seed);
    s.load(kTwiceByName);
    std::string out = s.specializeText("twice", "f{2}");
    if (out.find("= 16") == std::string::npos) {
      if (why) *why = "seed " + std::to_string(seed) +
                      " did not reduce the call to 16:\n" + out;
      return false;
    }
  }
  return true;
}

}  // namespace testutil
