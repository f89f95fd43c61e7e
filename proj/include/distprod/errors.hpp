#pragma once

#include <stdexcept>
#include <string>

namespace distprod {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid arguments or inconsistent object combinations (dimension
/// mismatches, bad grammar, malformed configuration).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

/// A derivative order outside the supported range, or a constant requested
/// outside its precondition (e.g. A_j with j > m).
class UnsupportedOrder : public Error {
public:
    explicit UnsupportedOrder(const std::string& msg) : Error(msg) {}
};

/// A quadrature or fit failed to reach its tolerance. Carries the achieved
/// error estimate and the partial value.
class NumericalError : public Error {
public:
    NumericalError(const std::string& msg, double partial_value, double error_estimate)
        : Error(msg), partial_value(partial_value), error_estimate(error_estimate) {}

    double partial_value;
    double error_estimate;
};

}  // namespace distprod
