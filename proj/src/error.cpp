#include "susynu/error.hpp"

namespace susynu {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoRealK: return "no real k";
    case ErrorCode::Underdetermined: return "underdetermined";
    case ErrorCode::InvalidK: return "invalid k";
    case ErrorCode::NoRoot: return "no root";
    case ErrorCode::AmbiguousBracket: return "ambiguous bracket";
    case ErrorCode::NoAdmissibleBranch: return "no admissible branch";
    case ErrorCode::UnsupportedSigma: return "unsupported sigma shape";
    case ErrorCode::NonIntegrableWeight: return "non-integrable weight";
    case ErrorCode::FormulaDomain: return "formula domain violation";
    case ErrorCode::NonNormalizable: return "non-normalizable";
    case ErrorCode::CoefficientUndefined: return "coefficient undefined";
    case ErrorCode::NoZeroMode: return "no zero mode; hierarchy base energy unknown";
    case ErrorCode::SingularNode: return "singular node";
    case ErrorCode::LengthMismatch: return "length mismatch";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<double> value)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      value_(value) {}

}  // namespace susynu
