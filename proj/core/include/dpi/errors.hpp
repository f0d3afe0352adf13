#pragma once

#include <stdexcept>
#include <string>

namespace dpi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by a vanishing sequence entry; carries the offending index.
struct ZeroDivisionError : Error {
    explicit ZeroDivisionError(long index)
        : Error("zero division at index n=" + std::to_string(index)), index(index) {}
    long index;
};

struct DomainError : Error {
    using Error::Error;
};

// A rational-function denominator vanished during evaluation.
struct PoleError : Error {
    PoleError(long k, double where)
        : Error("pole encountered at k=" + std::to_string(k) + ", z=" + std::to_string(where)),
          k(k), where(where) {}
    long k;
    double where;
};

struct NoConvergenceError : Error {
    NoConvergenceError(long iterations, double achieved)
        : Error("no convergence after " + std::to_string(iterations) +
                " iterations (achieved " + std::to_string(achieved) + ")"),
          iterations(iterations), achieved(achieved) {}
    long iterations;
    double achieved;
};

struct NegativeInputError : Error {
    using Error::Error;
};

// A Pochhammer factor in a Bessel-sum coefficient vanished.
struct SingularCoefficientError : Error {
    using Error::Error;
};

struct ResourceLimitError : Error {
    using Error::Error;
};

struct NotAvailableError : Error {
    using Error::Error;
};

struct SingularPointError : Error {
    using Error::Error;
};

struct DegenerateParamsError : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

} // namespace dpi
