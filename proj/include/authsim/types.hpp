#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace authsim {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonDiagonalizable : Error {
    using Error::Error;
};
struct Unstable : Error {
    using Error::Error;
};
struct UnknownSensor : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct TimeReversal : Error {
    using Error::Error;
};
struct SingularInnovation : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct DegenerateSpectrum : Error {
    using Error::Error;
};
struct NonResponsive : Error {
    using Error::Error;
};
struct EmptyInput : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace authsim
