#include "parser.hpp"

#include <set>

namespace howard {

int infixLevel(const std::string& sym) {
  if (sym == "<<" || sym == ">>") return 0;
  if (sym == ":=") return 1;
  if (sym == "::") return 2;
  if (sym == "=" || sym == "<" || sym == ">") return 3;
  if (sym == "+" || sym == "-") return 4;
  if (sym == "*" || sym == "/") return 5;
  if (sym == "?") return 6;
  return -1;
}

bool infixRightAssoc(const std::string& sym) {
  return sym == ":=" || sym == "::";
}

namespace {

constexpr int kMaxLevel = 6;
constexpr int kCmpLevel = 3;  // non-associative comparisons

class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  size_t pos = 0;

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Tok::End) ++pos;
    return t;
  }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& expect(Tok k, const char* what) {
    if (!at(k))
      throw Error(ErrorKind::SyntaxError,
                  std::string("expected ") + what + ", found '" + peek().text +
                      "'",
                  peek().pos);
    return next();
  }

  // -------------------------------------------------------------- signatures

  TypeExprAst parseTypeExpr() {
    TypeExprAst t;
    while (at(Tok::Name)) t.chain.push_back(next().text);
    if (t.chain.empty())
      throw Error(ErrorKind::SyntaxError, "expected a type expression",
                  peek().pos);
    return t;
  }

  std::vector<TypeParam> parseOfList() {
    std::vector<TypeParam> out;
    if (!at(Tok::KwOf)) return out;
    next();
    for (;;) {
      TypeParam p;
      if (at(Tok::Int)) p.arity = std::stoi(next().text);
      p.name = expect(Tok::Name, "type operator name").text;
      out.push_back(std::move(p));
      if (!at(Tok::Comma)) break;
      next();
    }
    return out;
  }

  std::shared_ptr<const OperatorSpec> parseOperatorSig() {
    auto op = std::make_shared<OperatorSpec>();
    op->symbol = expect(Tok::Op, "operator symbol").text;
    op->typeParams = parseOfList();
    expect(Tok::LParen, "'('");
    op->lhs = parseTypeExpr();
    expect(Tok::Comma, "','");
    op->rhs = parseTypeExpr();
    expect(Tok::RParen, "')'");
    expect(Tok::Colon, "':'");
    op->result = parseTypeExpr();
    return op;
  }

  std::vector<SigPtr> parseValueList() {
    expect(Tok::LParen, "'('");
    std::vector<SigPtr> entries;
    for (;;) {
      entries.push_back(parseSig(/*valueEntry=*/true));
      if (!at(Tok::Comma)) break;
      next();
    }
    expect(Tok::RParen, "')'");
    return entries;
  }

  SigPtr parseSig(bool valueEntry = false) {
    auto sig = std::make_shared<SignatureSpec>();
    sig->pos = peek().pos;
    sig->name = expect(Tok::Name, "signature name").text;
    sig->typeParams = parseOfList();
    std::set<std::string> seen;
    auto noteName = [&](const std::string& n, SourcePos p) {
      if (!seen.insert(n).second)
        throw Error(ErrorKind::DuplicateParamName,
                    "duplicate parameter name '" + n + "'", p);
    };
    for (;;) {
      if (at(Tok::LBrack)) {
        SourcePos p = peek().pos;
        next();
        ParamGroup g;
        if (at(Tok::Op)) {
          g.kind = ParamGroup::Kind::Operator;
          g.op = parseOperatorSig();
        } else {
          g.kind = ParamGroup::Kind::ByName;
          g.byName = parseSig();
          noteName(g.byName->name, p);
        }
        expect(Tok::RBrack, "']'");
        sig->params.push_back(std::move(g));
      } else if (at(Tok::LParen)) {
        SourcePos p = peek().pos;
        ParamGroup g;
        g.kind = ParamGroup::Kind::ByValue;
        g.byValue = parseValueList();
        for (const auto& e : g.byValue) noteName(e->name, p);
        sig->params.push_back(std::move(g));
      } else {
        break;
      }
    }
    if (at(Tok::Colon)) {
      next();
      sig->result = parseTypeExpr();
    } else if (valueEntry && sig->params.empty()) {
      throw Error(ErrorKind::SyntaxError,
                  "value parameter '" + sig->name +
                      "' requires a result type annotation",
                  sig->pos);
    }
    return sig;
  }

  // ------------------------------------------------------------- expressions

  ExprPtr parseSeqUntil(Tok closer, bool braced, SourcePos openPos) {
    std::vector<ExprPtr> items;
    while (!at(closer)) {
      if (at(Tok::End))
        throw Error(ErrorKind::UnbalancedBrace, "unterminated group", openPos);
      items.push_back(parseExpr(0));
      if (at(Tok::Semi)) {
        next();
        continue;
      }
      break;
    }
    if (!at(closer))
      throw Error(ErrorKind::UnbalancedBrace, "unterminated group", openPos);
    next();
    return mkSeq(std::move(items), braced, openPos);
  }

  Arg parseBracedArg(std::optional<std::string> label) {
    SourcePos p = peek().pos;
    expect(Tok::LBrace, "'{'");
    std::vector<ExprPtr> items;
    while (!at(Tok::RBrace)) {
      if (at(Tok::End))
        throw Error(ErrorKind::UnbalancedBrace, "unterminated argument", p);
      items.push_back(parseExpr(0));
      if (at(Tok::Semi)) {
        next();
        continue;
      }
      break;
    }
    expect(Tok::RBrace, "'}'");
    return bracedArg(mkSeq(std::move(items), false, p), std::move(label));
  }

  Arg parseValueListArg(std::optional<std::string> label) {
    SourcePos p = peek().pos;
    expect(Tok::LParen, "'('");
    std::vector<ExprPtr> items;
    for (;;) {
      items.push_back(parseExpr(0));
      if (at(Tok::Comma)) {
        next();
        continue;
      }
      break;
    }
    if (!at(Tok::RParen))
      throw Error(ErrorKind::UnbalancedBrace, "unterminated value list", p);
    next();
    return valueListArg(std::move(items), std::move(label));
  }

  // True when the token after a trailing name means "the name is a
  // declaration label and the final argument is the rest of the context".
  static bool endsMember(Tok k) {
    return k == Tok::Semi || k == Tok::RBrace || k == Tok::End;
  }

  ExprPtr parseApplication() {
    SourcePos p = peek().pos;
    std::string head = expect(Tok::Name, "name").text;
    std::optional<std::string> qualifier;
    if (at(Tok::Dot)) {
      next();
      qualifier = head;
      head = expect(Tok::Name, "member name").text;
    }
    std::vector<Arg> args;
    std::optional<std::string> pendingLabel;
    for (;;) {
      if (at(Tok::LBrace)) {
        args.push_back(parseBracedArg(std::nullopt));
      } else if (at(Tok::LParen)) {
        args.push_back(parseValueListArg(std::nullopt));
      } else if (at(Tok::Name)) {
        Tok after = peek(1).kind;
        if (after == Tok::Colon) {
          std::string label = next().text;
          next();  // ':'
          if (at(Tok::LBrace))
            args.push_back(parseBracedArg(label));
          else if (at(Tok::LParen))
            args.push_back(parseValueListArg(label));
          else if (endsMember(peek().kind)) {
            pendingLabel = label;
            break;
          } else {
            throw Error(ErrorKind::SyntaxError,
                        "expected an argument after label '" + label + ":'",
                        peek().pos);
          }
        } else if (after == Tok::LBrace || after == Tok::LParen) {
          std::string label = next().text;
          if (at(Tok::LBrace))
            args.push_back(parseBracedArg(label));
          else
            args.push_back(parseValueListArg(label));
        } else if (endsMember(after)) {
          pendingLabel = next().text;
          break;
        } else {
          break;  // a separate expression; caller may insert '?'
        }
      } else {
        break;
      }
    }
    auto e = mkApply(head, std::move(args), p, qualifier);
    if (pendingLabel) {
      auto m = std::const_pointer_cast<Expr>(e);
      m->pendingLabel = pendingLabel;
    }
    return e;
  }

  ExprPtr parsePrimary() {
    SourcePos p = peek().pos;
    switch (peek().kind) {
      case Tok::Int: {
        const Token& t = next();
        return mkInt(std::stoll(t.text), p);
      }
      case Tok::String: {
        const Token& t = next();
        return mkStr(t.text, p);
      }
      case Tok::Tilde: {
        next();
        const Token& t = expect(Tok::String, "string literal after '~'");
        return mkStr(t.text, p);
      }
      case Tok::LParen: {
        next();
        ExprPtr e = parseExpr(0);
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBrace: {
        next();
        return parseSeqUntil(Tok::RBrace, /*braced=*/true, p);
      }
      case Tok::LBrack: {
        next();
        std::vector<ExprPtr> items;
        if (!at(Tok::RBrack)) {
          for (;;) {
            items.push_back(parseExpr(0));
            if (at(Tok::Comma)) {
              next();
              continue;
            }
            break;
          }
        }
        expect(Tok::RBrack, "']'");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::ListLit;
        e->pos = p;
        e->items = std::move(items);
        return e;
      }
      case Tok::KwDef: {
        next();
        SigPtr sig = parseSig();
        Arg defArg = parseBracedArg(std::nullopt);
        ExprPtr appBody;
        if (at(Tok::LBrace)) {
          Arg appArg = parseBracedArg(std::nullopt);
          appBody = appArg.body;
        }
        return mkDef(sig, defArg.body, appBody, p);
      }
      case Tok::Name:
        return parseApplication();
      default:
        throw Error(ErrorKind::SyntaxError,
                    "expected an expression, found '" + peek().text + "'",
                    peek().pos);
    }
  }

  static bool startsPrimary(Tok k) {
    return k == Tok::Int || k == Tok::String || k == Tok::Tilde ||
           k == Tok::Name || k == Tok::LBrace || k == Tok::LBrack ||
           k == Tok::LParen || k == Tok::KwDef;
  }

  ExprPtr parseExpr(int minLevel) {
    ExprPtr lhs = parsePrimary();
    for (;;) {
      if (at(Tok::Op)) {
        const std::string& sym = peek().text;
        int lvl = infixLevel(sym);
        if (lvl < minLevel) break;
        SourcePos p = peek().pos;
        next();
        int rhsLevel = infixRightAssoc(sym) ? lvl : lvl + 1;
        if (lvl == kCmpLevel) rhsLevel = lvl + 1;  // non-assoc
        ExprPtr rhs = parseExpr(rhsLevel);
        lhs = mkInfix(sym, lhs, rhs, p);
        continue;
      }
      // A '?' is assumed when no other operator separates two expressions.
      if (startsPrimary(peek().kind) && kMaxLevel >= minLevel &&
          peek().kind != Tok::LBrace && peek().kind != Tok::LParen &&
          peek().kind != Tok::KwDef) {
        SourcePos p = peek().pos;
        ExprPtr rhs = parseExpr(kMaxLevel + 1);
        lhs = mkInfix("?", lhs, rhs, p);
        continue;
      }
      break;
    }
    return lhs;
  }

 private:
  const std::vector<Token>& toks_;
};

}  // namespace

SigPtr parseSignature(const std::vector<Token>& toks, size_t& i) {
  Parser p(toks);
  p.pos = i;
  SigPtr s = p.parseSig();
  i = p.pos;
  return s;
}

ExprPtr parseExpression(const std::vector<Token>& toks, size_t& i) {
  Parser p(toks);
  p.pos = i;
  ExprPtr e = p.parseExpr(0);
  i = p.pos;
  return e;
}

SigPtr parseSignature(const std::string& source) {
  auto toks = tokenize(source);
  Parser p(toks);
  SigPtr s = p.parseSig();
  if (!p.at(Tok::End))
    throw Error(ErrorKind::SyntaxError,
                "trailing input after signature: '" + p.peek().text + "'",
                p.peek().pos);
  return s;
}

ExprPtr parseExpression(const std::string& source) {
  auto toks = tokenize(source);
  Parser p(toks);
  ExprPtr e = p.parseExpr(0);
  if (!p.at(Tok::End))
    throw Error(ErrorKind::SyntaxError,
                "trailing input after expression: '" + p.peek().text + "'",
                p.peek().pos);
  return e;
}

ExprPtr parseProgram(const std::string& source) {
  auto toks = tokenize(source);
  Parser p(toks);
  std::vector<ExprPtr> items;
  while (!p.at(Tok::End)) {
    items.push_back(p.parseExpr(0));
    if (p.at(Tok::Semi)) {
      p.next();
      continue;
    }
    break;
  }
  if (!p.at(Tok::End))
    throw Error(ErrorKind::SyntaxError,
                "trailing input: '" + p.peek().text + "'", p.peek().pos);
  return mkSeq(std::move(items), false, SourcePos{1, 1});
}

}  // namespace howard
