#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace dtvol {

using cplx = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters: knot indices, two-bridge (p, q), M = 0, malformed words.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Relator word W with tilde(W) != W^-1 (or W empty).
class InadmissibleWord : public Error {
 public:
  using Error::Error;
};

/// Pole of the Le / Mednykh formulation at r = 2 - z = 0.
class PoleAtAbelianLocus : public Error {
 public:
  using Error::Error;
};

/// Seed polynomial has no nonreal root: trefoil or non-hyperbolic parameters.
class NonHyperbolic : public Error {
 public:
  using Error::Error;
};

class ContinuationAmbiguous : public Error {
 public:
  using Error::Error;
};

class DegenerateLongitude : public Error {
 public:
  using Error::Error;
};

/// |L| < 1 on a point that should satisfy the branch condition.
class NegativeIntegrand : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class QuadratureNotConverged : public NumericalFailure {
 public:
  QuadratureNotConverged(const std::string& what, double estimate, double error)
      : NumericalFailure(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

}  // namespace dtvol
