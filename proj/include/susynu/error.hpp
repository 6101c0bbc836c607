#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace susynu {

enum class ErrorCode {
  NoRealK,
  Underdetermined,
  InvalidK,
  NoRoot,
  AmbiguousBracket,
  NoAdmissibleBranch,
  UnsupportedSigma,
  NonIntegrableWeight,
  FormulaDomain,
  NonNormalizable,
  CoefficientUndefined,
  NoZeroMode,
  SingularNode,
  LengthMismatch,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorCode code);

/// Library-wide failure. `value` carries the offending number when one exists
/// (for example the discriminant behind a NoRealK failure).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<double> value = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::optional<double> value_;
};

}  // namespace susynu
