#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace maasskit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested at (or too close to) a pole.
struct PoleError : Error {
    std::complex<double> pole;
    explicit PoleError(std::complex<double> where, const std::string& what = "evaluation at a pole")
        : Error(what + " (pole near " + std::to_string(where.real()) + "+" +
                std::to_string(where.imag()) + "i)"),
          pole(where) {}
};

struct DomainError : Error {
    using Error::Error;
};

struct ParameterError : Error {
    using Error::Error;
};

// 2F1 continuation series undefined for integer a-b.
struct ContinuationError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct InsufficientCoefficients : Error {
    std::size_t required;
    explicit InsufficientCoefficients(std::size_t need)
        : Error("need coefficients up to n=" + std::to_string(need)), required(need) {}
};

struct QuadratureError : Error {
    using Error::Error;
};

struct RelationError : Error {
    using Error::Error;
};

struct SingularSystem : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct PoleOnContour : Error {
    std::complex<double> pole;
    explicit PoleOnContour(std::complex<double> where)
        : Error("pole within 1e-3 of the integration contour"), pole(where) {}
};

struct DegenerateFixedPoints : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

struct SanityBoundViolation : Error {
    using Error::Error;
};

struct BadPrimeUnsupported : Error {
    using Error::Error;
};

struct MissingEigenvalue : Error {
    long prime;
    explicit MissingEigenvalue(long p)
        : Error("no Hecke eigenvalue stored for p=" + std::to_string(p)), prime(p) {}
};

}  // namespace maasskit
