#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinsurf {

enum class ErrorKind {
  kDimensionMismatch,
  kDegeneratePairing,
  kEnumerationCap,
  kInternalInvariant,
  kWitnessUnsupported,
  kNonCoprimePair,
  kProfileMismatch,
  kWrongCentralBehavior,
  kNonIntegralExponent,
  kNoSolution,
  kMultipleSolutions,
  kNotTorsion,
  kInvalidArgument,
  kParseError,
};

std::string_view error_name(ErrorKind kind);

// Domain error raised by every library entry point. The CLI maps these to
// exit status 1 and prints name() on the diagnostic stream.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace spinsurf
