#include "ellschub/errors.hpp"

namespace ellschub {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SubstitutionPole: return "SubstitutionPole";
    case ErrorKind::EvaluationPole: return "EvaluationPole";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::RegistryFull: return "RegistryFull";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::Cache: return "CacheError";
    case ErrorKind::Certificate: return "MalformedCertificate";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::WrongType: return "WrongType";
    case ErrorKind::WrongMode: return "WrongMode";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::SingularLeadingTerm: return "SingularLeadingTerm";
    case ErrorKind::NotComparable: return "NotComparable";
  }
  return "Error";
}

}  // namespace ellschub
