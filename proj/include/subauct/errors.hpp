#pragma once

#include <stdexcept>
#include <string>

namespace subauct {

struct SubauctError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction failures of valuations.
struct ValuationError : SubauctError {
  using SubauctError::SubauctError;
};
struct MonotonicityViolation : ValuationError {
  using ValuationError::ValuationError;
};
struct NormalizationViolation : ValuationError {
  using ValuationError::ValuationError;
};
struct NegativeValue : ValuationError {
  using ValuationError::ValuationError;
};

// Dimension / size errors.
struct UniverseMismatch : SubauctError {
  using SubauctError::SubauctError;
};
struct UniverseTooLarge : SubauctError {
  using SubauctError::SubauctError;
};
struct UniverseTooSmall : SubauctError {
  using SubauctError::SubauctError;
};
struct InstanceTooLarge : SubauctError {
  using SubauctError::SubauctError;
};
struct DimensionMismatch : SubauctError {
  using SubauctError::SubauctError;
};

// Precondition failures of specific operations.
struct NotSubmodular : SubauctError {
  using SubauctError::SubauctError;
};
struct NotSymmetric : SubauctError {
  using SubauctError::SubauctError;
};
struct NotOxsExpression : SubauctError {
  using SubauctError::SubauctError;
};
struct PerturbationTooLarge : SubauctError {
  using SubauctError::SubauctError;
};
struct UnboundedComplementarity : SubauctError {
  using SubauctError::SubauctError;
};
struct NonTermination : SubauctError {
  using SubauctError::SubauctError;
};

// Instance file ingestion.
struct ParseError : SubauctError {
  using SubauctError::SubauctError;
};
struct SchemaError : SubauctError {
  using SubauctError::SubauctError;
};

}  // namespace subauct
