#include "lexer.hpp"

#include <cctype>

namespace howard {

namespace {

bool isNameStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool isNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto here = [&]() { return SourcePos{line, col}; };
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto push = [&](Tok k, std::string text, SourcePos p) {
    out.push_back(Token{k, std::move(text), p});
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    SourcePos pos = here();
    if (isNameStart(c)) {
      size_t j = i;
      while (j < src.size() && isNameChar(src[j])) ++j;
      std::string word = src.substr(i, j - i);
      advance(j - i);
      if (word == "DEF")
        push(Tok::KwDef, word, pos);
      else if (word == "OF")
        push(Tok::KwOf, word, pos);
      else
        push(Tok::Name, word, pos);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      push(Tok::Int, src.substr(i, j - i), pos);
      advance(j - i);
      continue;
    }
    if (c == '"') {
      size_t j = i + 1;
      std::string text;
      while (j < src.size() && src[j] != '"') {
        if (src[j] == '\n')
          throw Error(ErrorKind::UnterminatedString, "newline in string", pos);
        if (src[j] == '\\' && j + 1 < src.size()) {
          char e = src[j + 1];
          if (e == 'n')
            text += '\n';
          else if (e == 't')
            text += '\t';
          else
            text += e;
          j += 2;
          continue;
        }
        text += src[j];
        ++j;
      }
      if (j >= src.size())
        throw Error(ErrorKind::UnterminatedString, "missing closing quote", pos);
      advance(j + 1 - i);
      push(Tok::String, text, pos);
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < src.size() && src[i + 1] == b;
    };
    if (two(':', '=')) { push(Tok::Op, ":=", pos); advance(2); continue; }
    if (two(':', ':')) { push(Tok::Op, "::", pos); advance(2); continue; }
    if (two('<', '<')) { push(Tok::Op, "<<", pos); advance(2); continue; }
    if (two('>', '>')) { push(Tok::Op, ">>", pos); advance(2); continue; }
    switch (c) {
      case '{': push(Tok::LBrace, "{", pos); advance(1); continue;
      case '}': push(Tok::RBrace, "}", pos); advance(1); continue;
      case '[': push(Tok::LBrack, "[", pos); advance(1); continue;
      case ']': push(Tok::RBrack, "]", pos); advance(1); continue;
      case '(': push(Tok::LParen, "(", pos); advance(1); continue;
      case ')': push(Tok::RParen, ")", pos); advance(1); continue;
      case ',': push(Tok::Comma, ",", pos); advance(1); continue;
      case ';': push(Tok::Semi, ";", pos); advance(1); continue;
      case ':': push(Tok::Colon, ":", pos); advance(1); continue;
      case '.': push(Tok::Dot, ".", pos); advance(1); continue;
      case '~': push(Tok::Tilde, "~", pos); advance(1); continue;
      case '*': case '/': case '+': case '-':
      case '=': case '<': case '>': case '?':
        push(Tok::Op, std::string(1, c), pos);
        advance(1);
        continue;
      default:
        throw Error(ErrorKind::IllegalCharacter,
                    std::string("unexpected character '") + c + "'", pos);
    }
  }
  out.push_back(Token{Tok::End, "", here()});
  return out;
}

}  // namespace howard
