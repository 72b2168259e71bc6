#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jbmeans {

/// Raised when operands live in different algebras, or a parameter is out of
/// its admissible range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a spectrum leaves the domain of a scalar function (or of a
/// mean / perspective hypothesis). Carries the offending eigenvalue.
class SpectrumDomainError : public std::domain_error {
 public:
  SpectrumDomainError(const std::string& what, double eigenvalue)
      : std::domain_error(what), eigenvalue_(eigenvalue) {}

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// Raised when a quadrature does not meet its tolerance within the allowed
/// refinement levels. The best estimate (one entry for scalar integrals, one
/// per coordinate for element-valued ones) is kept.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, std::vector<double> estimate,
                  double error_bound)
      : std::runtime_error(what),
        estimate_(std::move(estimate)),
        error_bound_(error_bound) {}

  const std::vector<double>& estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  std::vector<double> estimate_;
  double error_bound_;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed JSON, or a document with missing or mistyped fields.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jbmeans
