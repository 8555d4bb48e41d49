#include "c1cox/error.hpp"

namespace c1cox {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedData: return "MalformedData";
    case ErrorKind::DuplicateAValues: return "DuplicateAValues";
    case ErrorKind::DependentAColumns: return "DependentAColumns";
    case ErrorKind::NonpositiveExponent: return "NonpositiveExponent";
    case ErrorKind::NonprimitiveColumn: return "NonprimitiveColumn";
    case ErrorKind::DuplicateColumn: return "DuplicateColumn";
    case ErrorKind::RankDeficientP: return "RankDeficientP";
    case ErrorKind::BadSRange: return "BadSRange";
    case ErrorKind::MissingD: return "MissingD";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::Type2Unsupported: return "Type2Unsupported";
    case ErrorKind::CertificateFailed: return "CertificateFailed";
    case ErrorKind::DegenerateCone: return "DegenerateCone";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::RayMismatch: return "RayMismatch";
    case ErrorKind::NotASurfaceCase: return "NotASurfaceCase";
    case ErrorKind::NonIntegerSlopeSum: return "NonIntegerSlopeSum";
    case ErrorKind::NonSmoothCone: return "NonSmoothCone";
    case ErrorKind::BadQ: return "BadQ";
    case ErrorKind::FaceCapExceeded: return "FaceCapExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace c1cox
