#ifndef QLLG_ERRORS_HPP
#define QLLG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qllg {

/// Base class for all errors thrown by this library.
class QllgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public QllgError {
 public:
  using QllgError::QllgError;
};

/// Requested dense dimension exceeds the configured cap.
class DimensionOverflowError : public QllgError {
 public:
  using QllgError::QllgError;
};

/// The eigensolver failed to converge; signals numerical breakdown and the
/// caller should abort the trajectory.
class NonConvergenceError : public QllgError {
 public:
  using QllgError::QllgError;
};

class IndexOutOfRangeError : public QllgError {
 public:
  using QllgError::QllgError;
};

class InvalidLatticeError : public QllgError {
 public:
  using QllgError::QllgError;
};

class InvalidProbabilityVectorError : public QllgError {
 public:
  using QllgError::QllgError;
};

class UnknownTableauError : public QllgError {
 public:
  using QllgError::QllgError;
};

/// A Sylvester denominator fell below the safety threshold. The theory rules
/// this out for real kappa and real eigenvalues, so hitting it means the
/// inputs are corrupted.
class SingularDenominatorError : public QllgError {
 public:
  using QllgError::QllgError;
};

class NotRankOneError : public QllgError {
 public:
  using QllgError::QllgError;
};

class SingularSystemError : public QllgError {
 public:
  using QllgError::QllgError;
};

/// An expectation value came out with a non-negligible imaginary part,
/// which points at a Hermiticity violation upstream.
class NonNegligibleImaginaryPartError : public QllgError {
 public:
  using QllgError::QllgError;
};

class NumericalBlowupError : public QllgError {
 public:
  using QllgError::QllgError;
};

class ConfigError : public QllgError {
 public:
  using QllgError::QllgError;
};

}  // namespace qllg

#endif  // QLLG_ERRORS_HPP
