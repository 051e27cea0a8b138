#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace howard {

struct SourcePos {
  int line = 0;  // 1-based; 0 means "no position"
  int column = 0;

  bool valid() const { return line > 0; }
  std::string str() const {
    if (!valid()) return "<unknown>";
    return std::to_string(line) + ":" + std::to_string(column);
  }
};

enum class ErrorKind {
  // lexer / parser
  UnterminatedString,
  IllegalCharacter,
  SyntaxError,
  UnbalancedBrace,
  DuplicateParamName,
  // desugar
  UnknownOperation,
  ArityMismatch,
  AmbiguousDeclaration,
  LabelMismatch,
  // lambda core
  UnsupportedFeature,
  FuelExhausted,
  OverflowError,
  // type inference
  TypeMismatch,
  UnresolvedTypeParam,
  UnknownOperator,
  UnifyFailure,
  // rules engine
  UnsupportedSignature,
  ContextMismatch,
  NoAxiomApplies,
  AnnihilateViolation,
  Stuck,
  // specializer
  NonEliminable,
  // evaluator
  RuntimeTypeError,
  DivisionByZero,
  DuplicateName,
  Unimplemented,
  UninitializedVariable,
  // cli
  UsageError,
  IoError,
};

const char* errorKindName(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, SourcePos pos = {})
      : std::runtime_error(format(kind, message, pos)),
        kind_(kind),
        pos_(pos) {}

  ErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }

 private:
  static std::string format(ErrorKind kind, const std::string& msg,
                            SourcePos pos) {
    std::string s = errorKindName(kind);
    if (pos.valid()) s += " at " + pos.str();
    s += ": " + msg;
    return s;
  }

  ErrorKind kind_;
  SourcePos pos_;
};

}  // namespace howard
