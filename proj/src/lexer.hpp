#pragma once

#include <string>
#include <vector>

#include "diag.hpp"

namespace howard {

enum class Tok {
  Name,     // identifier (letter/_ then letters/digits/_)
  Int,      // natural number literal
  String,   // "..." literal (text holds the unquoted value)
  Op,       // operator symbol: * / + - = < > << >> := :: ?
  LBrace,
  RBrace,
  LBrack,
  RBrack,
  LParen,
  RParen,
  Comma,
  Semi,
  Colon,
  Dot,
  Tilde,
  KwDef,    // DEF
  KwOf,     // OF
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

// Comments run from '#' to end of line.
std::vector<Token> tokenize(const std::string& source);

}  // namespace howard
