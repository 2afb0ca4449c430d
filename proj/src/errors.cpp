#include "spinsurf/errors.hpp"

namespace spinsurf {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kDegeneratePairing: return "DegeneratePairing";
    case ErrorKind::kEnumerationCap: return "EnumerationCap";
    case ErrorKind::kInternalInvariant: return "InternalInvariant";
    case ErrorKind::kWitnessUnsupported: return "WitnessUnsupported";
    case ErrorKind::kNonCoprimePair: return "NonCoprimePair";
    case ErrorKind::kProfileMismatch: return "ProfileMismatch";
    case ErrorKind::kWrongCentralBehavior: return "WrongCentralBehavior";
    case ErrorKind::kNonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::kNoSolution: return "NoSolution";
    case ErrorKind::kMultipleSolutions: return "MultipleSolutions";
    case ErrorKind::kNotTorsion: return "NotTorsion";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace spinsurf
