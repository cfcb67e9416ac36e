#pragma once

#include <stdexcept>
#include <string>

namespace hypercauchy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The element has no inverse on the requested side.
class SingularElement : public Error {
 public:
  using Error::Error;
};

class UnknownAlgebra : public Error {
 public:
  using Error::Error;
};

/// Structure constants violate a required invariant (unit law, shape).
class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

class InvalidConditions : public Error {
 public:
  using Error::Error;
};

/// The feasibility decision is ambiguous: the residual lies between the
/// feasibility tolerance and the infeasibility floor.
class IllConditioned : public Error {
 public:
  IllConditioned(const std::string& what, double residual, double gap)
      : Error(what), residual_(residual), gap_(gap) {}
  double residual() const noexcept { return residual_; }
  double gap() const noexcept { return gap_; }

 private:
  double residual_;
  double gap_;
};

class BasisNotAnticommuting : public Error {
 public:
  using Error::Error;
};

class NotCommutative : public Error {
 public:
  using Error::Error;
};

class SingularPrincipalMinor : public Error {
 public:
  using Error::Error;
};

class OnDiagonal : public Error {
 public:
  using Error::Error;
};

class PointOutsideDomain : public Error {
 public:
  using Error::Error;
};

class QuadratureUnderResolved : public Error {
 public:
  QuadratureUnderResolved(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

class NoAffineData : public Error {
 public:
  using Error::Error;
};

/// Malformed input document; carries the 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hypercauchy
