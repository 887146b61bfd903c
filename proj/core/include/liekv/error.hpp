#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liekv {

/// Failure categories raised by the library. Each value names the
/// condition a caller can branch on; the message carries the details.
enum class ErrorKind {
  DimensionMismatch,
  AntisymmetryViolation,
  JacobiViolation,
  NotASubalgebra,
  InternalInconsistency,
  NilradicalUndecided,
  DeclaredNilradicalInvalid,
  NotComplementary,
  KillingDegenerateOnLevi,
  ZeroPolynomial,
  IrrationalBeta,
  NonImaginarySpectrum,
  EmptyA2,
  NotInRootSpace,
  NotReductive,
  MetricNotInvariant,
  MetricNotPositiveDefinite,
  IneffectiveAction,
  GoStatusUnknown,
  UnknownStatement,
  MissingDeclaration,
  ParseError,
  ValidationError,
  UsageError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<long> indices = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        indices_(std::move(indices)) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Basis indices involved in the failure (e.g. the Jacobi triple).
  const std::vector<long>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<long> indices_;
};

}  // namespace liekv
