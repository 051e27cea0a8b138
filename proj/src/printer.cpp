#include "printer.hpp"

#include <sstream>

#include "parser.hpp"

namespace howard {

namespace {

std::string printTypeExpr(const TypeExprAst& t) {
  std::string out;
  for (size_t i = 0; i < t.chain.size(); ++i) {
    if (i) out += ' ';
    out += t.chain[i];
  }
  return out;
}

std::string printOfList(const std::vector<TypeParam>& ps) {
  if (ps.empty()) return "";
  std::string out = " OF ";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    if (ps[i].arity > 0) out += std::to_string(ps[i].arity) + " ";
    out += ps[i].name;
  }
  return out;
}

void printSig(const SignatureSpec& s, std::string& out) {
  out += s.name;
  out += printOfList(s.typeParams);
  for (const auto& g : s.params) {
    switch (g.kind) {
      case ParamGroup::Kind::ByName:
        out += " [";
        printSig(*g.byName, out);
        out += "]";
        break;
      case ParamGroup::Kind::ByValue: {
        out += " (";
        for (size_t i = 0; i < g.byValue.size(); ++i) {
          if (i) out += ", ";
          printSig(*g.byValue[i], out);
        }
        out += ")";
        break;
      }
      case ParamGroup::Kind::Operator:
        out += " [";
        out += g.op->symbol;
        out += printOfList(g.op->typeParams);
        out += "(" + printTypeExpr(g.op->lhs) + ", " +
               printTypeExpr(g.op->rhs) + ") : " +
               printTypeExpr(g.op->result);
        out += "]";
        break;
    }
  }
  if (s.result) {
    out += " : ";
    out += printTypeExpr(*s.result);
  }
}

struct ExprPrinter {
  std::string out;

  void seqItems(const std::vector<ExprPtr>& items) {
    for (size_t i = 0; i < items.size(); ++i) {
      if (i) out += "; ";
      expr(items[i], 0);
    }
  }

  void arg(const Arg& a) {
    if (a.label) out += " " + *a.label + ":";
    if (a.isValueList) {
      out += "(";
      for (size_t i = 0; i < a.items.size(); ++i) {
        if (i) out += ", ";
        expr(a.items[i], 0);
      }
      out += ")";
    } else {
      out += "{";
      seqItems(a.body->items);
      out += "}";
    }
  }

  void expr(const ExprPtr& e, int minLevel) {
    switch (e->kind) {
      case Expr::Kind::Seq:
        if (e->braced) {
          out += "{";
          seqItems(e->items);
          out += "}";
        } else if (e->items.size() == 1) {
          expr(e->items[0], minLevel);
        } else {
          out += "{";
          seqItems(e->items);
          out += "}";
        }
        break;
      case Expr::Kind::Apply: {
        if (e->qualifier) out += *e->qualifier + ".";
        out += e->op;
        for (const auto& a : e->args) arg(a);
        if (e->pendingLabel) out += " " + *e->pendingLabel;
        break;
      }
      case Expr::Kind::Infix: {
        int lvl = infixLevel(e->sym);
        bool paren = lvl < minLevel;
        if (paren) out += "(";
        bool rightAssoc = infixRightAssoc(e->sym);
        expr(e->lhs, rightAssoc ? lvl + 1 : lvl);
        out += " " + e->sym + " ";
        expr(e->rhs, rightAssoc ? lvl : lvl + 1);
        if (paren) out += ")";
        break;
      }
      case Expr::Kind::IntConst:
        out += std::to_string(e->intValue);
        break;
      case Expr::Kind::StrConst: {
        out += '"';
        for (char c : e->strValue) {
          if (c == '\n')
            out += "\\n";
          else if (c == '"')
            out += "\\\"";
          else if (c == '\\')
            out += "\\\\";
          else
            out += c;
        }
        out += '"';
        break;
      }
      case Expr::Kind::ListLit: {
        out += "[";
        for (size_t i = 0; i < e->items.size(); ++i) {
          if (i) out += ", ";
          expr(e->items[i], 0);
        }
        out += "]";
        break;
      }
      case Expr::Kind::Def: {
        out += "DEF ";
        printSig(*e->sig, out);
        out += " {";
        seqItems(e->defBody->items);
        out += "}";
        if (e->appBody) {
          out += " {";
          seqItems(e->appBody->items);
          out += "}";
        }
        break;
      }
    }
  }
};

void dump(const ExprPtr& e, int depth, std::ostringstream& os) {
  std::string pad(static_cast<size_t>(depth) * 2, ' ');
  os << pad;
  switch (e->kind) {
    case Expr::Kind::Seq:
      os << "(seq" << (e->braced ? " braced" : "") << "\n";
      for (const auto& it : e->items) dump(it, depth + 1, os);
      os << pad << ")\n";
      break;
    case Expr::Kind::Apply: {
      os << "(apply " << (e->qualifier ? *e->qualifier + "." : "") << e->op;
      if (e->pendingLabel) os << " pending=" << *e->pendingLabel;
      os << "\n";
      for (const auto& a : e->args) {
        os << pad << "  (arg";
        if (a.label) os << " label=" << *a.label;
        if (a.isValueList) os << " values";
        os << "\n";
        if (a.isValueList) {
          for (const auto& it : a.items) dump(it, depth + 2, os);
        } else {
          dump(a.body, depth + 2, os);
        }
        os << pad << "  )\n";
      }
      os << pad << ")\n";
      break;
    }
    case Expr::Kind::Infix:
      os << "(infix " << e->sym << "\n";
      dump(e->lhs, depth + 1, os);
      dump(e->rhs, depth + 1, os);
      os << pad << ")\n";
      break;
    case Expr::Kind::IntConst:
      os << "(int " << e->intValue << ")\n";
      break;
    case Expr::Kind::StrConst:
      os << "(str " << e->strValue << ")\n";
      break;
    case Expr::Kind::ListLit:
      os << "(list\n";
      for (const auto& it : e->items) dump(it, depth + 1, os);
      os << pad << ")\n";
      break;
    case Expr::Kind::Def:
      os << "(def " << printSignature(e->sig) << "\n";
      dump(e->defBody, depth + 1, os);
      if (e->appBody) dump(e->appBody, depth + 1, os);
      os << pad << ")\n";
      break;
  }
}

}  // namespace

std::string printExpr(const ExprPtr& e) {
  ExprPrinter p;
  if (e->kind == Expr::Kind::Seq && !e->braced) {
    p.seqItems(e->items);
  } else {
    p.expr(e, 0);
  }
  return p.out;
}

std::string printSignature(const SigPtr& s) {
  std::string out;
  printSig(*s, out);
  return out;
}

std::string dumpExpr(const ExprPtr& e) {
  std::ostringstream os;
  dump(e, 0, os);
  return os.str();
}

}  // namespace howard
