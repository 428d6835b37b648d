#ifndef STA_ERRORS_HPP
#define STA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sta {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands disagree in dimension or degree.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// A direction vector that must be nonzero is (numerically) zero.
struct ZeroVector : Error {
    explicit ZeroVector(const std::string& msg) : Error(msg) {}
};

// Symmetric tensor entries disagree across index permutations.
struct AsymmetricInput : Error {
    explicit AsymmetricInput(const std::string& msg) : Error(msg) {}
};

// Degree outside the supported range (d >= 3 for rank formulas).
struct UnsupportedDegree : Error {
    explicit UnsupportedDegree(const std::string& msg) : Error(msg) {}
};

// Nonpositive target for a norm rescaling.
struct InvalidScale : Error {
    explicit InvalidScale(const std::string& msg) : Error(msg) {}
};

// Hankel row degree outside 1..d-1.
struct InvalidDegreeSplit : Error {
    explicit InvalidDegreeSplit(const std::string& msg) : Error(msg) {}
};

// Operation requires a nonzero polynomial.
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& msg) : Error(msg) {}
};

// Decomposition columns must have unit norm.
struct NotNormalized : Error {
    explicit NotNormalized(const std::string& msg) : Error(msg) {}
};

// Retraction input has a (numerically) zero Hankel matrix.
struct DegenerateRetraction : Error {
    explicit DegenerateRetraction(const std::string& msg) : Error(msg) {}
};

// A transform that must produce a real result left a large imaginary residue.
struct NonRealResult : Error {
    explicit NonRealResult(const std::string& msg) : Error(msg) {}
};

// Initial point gives a zero trust region radius (all weights zero).
struct DegenerateInitialPoint : Error {
    explicit DegenerateInitialPoint(const std::string& msg) : Error(msg) {}
};

// Degree too small for the spectral initializer, or rank exceeds the
// dimensions of the degree-split Hankel matrix.
struct InsufficientDegree : Error {
    explicit InsufficientDegree(const std::string& msg) : Error(msg) {}
};

// Malformed input file; message carries a line number when available.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace sta

#endif
