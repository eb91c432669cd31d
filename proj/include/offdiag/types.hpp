#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace offdiag {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Base of every validation failure raised by the library. Each subclass names
// the violated precondition or invariant.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct TraceNotOne : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };
struct NotProjector : Error { using Error::Error; };
struct LengthZero : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct TooFewSamples : Error { using Error::Error; };
struct NotDiagonalInBasis : Error { using Error::Error; };
struct NotPermuting : Error { using Error::Error; };
struct NotUnitModulus : Error { using Error::Error; };
struct ConfigInvalid : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace offdiag
