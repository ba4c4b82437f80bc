#ifndef HANKELDET_ERROR_HPP
#define HANKELDET_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hankeldet {

enum class ErrorCode {
  ParseError,
  InvalidParameters,
  NotDivisible,
  PoleAtLimit,
  InternalInexactDivision,
  NotCheckerboard,
  InsufficientCoefficients,
  DegenerateMoments,
  CommonRootViolated,
  OutOfRange,
  UnknownIdentity,
  NegativeUmbralExponent,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `index()` carries the order or
/// position at which the failure was detected when that is meaningful
/// (e.g. the first vanishing Hankel determinant for DegenerateMoments).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<long> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<long> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<long> index_;
};

}  // namespace hankeldet

#endif  // HANKELDET_ERROR_HPP
