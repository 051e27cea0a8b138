#include "diag.hpp"

namespace howard {

const char* errorKindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnterminatedString: return "UnterminatedString";
    case ErrorKind::IllegalCharacter: return "IllegalCharacter";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnbalancedBrace: return "UnbalancedBrace";
    case ErrorKind::DuplicateParamName: return "DuplicateParamName";
    case ErrorKind::UnknownOperation: return "UnknownOperation";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::AmbiguousDeclaration: return "AmbiguousDeclaration";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::UnsupportedFeature: return "UnsupportedFeature";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::OverflowError: return "OverflowError";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnresolvedTypeParam: return "UnresolvedTypeParam";
    case ErrorKind::UnknownOperator: return "UnknownOperator";
    case ErrorKind::UnifyFailure: return "UnifyFailure";
    case ErrorKind::UnsupportedSignature: return "UnsupportedSignature";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NoAxiomApplies: return "NoAxiomApplies";
    case ErrorKind::AnnihilateViolation: return "AnnihilateViolation";
    case ErrorKind::Stuck: return "Stuck";
    case ErrorKind::NonEliminable: return "NonEliminable";
    case ErrorKind::RuntimeTypeError: return "RuntimeTypeError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::Unimplemented: return "Unimplemented";
    case ErrorKind::UninitializedVariable: return "UninitializedVariable";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace howard
