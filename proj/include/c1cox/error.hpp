#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace c1cox {

enum class ErrorKind {
  InvalidArgument,
  MalformedData,
  DuplicateAValues,
  DependentAColumns,
  NonpositiveExponent,
  NonprimitiveColumn,
  DuplicateColumn,
  RankDeficientP,
  BadSRange,
  MissingD,
  HypothesisViolated,
  Type2Unsupported,
  CertificateFailed,
  DegenerateCone,
  UnsupportedDimension,
  RayMismatch,
  NotASurfaceCase,
  NonIntegerSlopeSum,
  NonSmoothCone,
  BadQ,
  FaceCapExceeded,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
/// The kind identifies the violated condition; the message carries the
/// concrete witness (offending column, block, pair, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace c1cox
