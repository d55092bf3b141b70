#pragma once

#include <stdexcept>
#include <string>

namespace kq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments violate an operation's precondition (bad degree, empty list, malformed file).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An iterative method failed to converge, or a clustering step was ambiguous.
class NumericFailure : public Error {
public:
    NumericFailure(const std::string& what, double worst)
        : Error(what), worst_(worst) {}

    /// Worst residual (or closest gap) observed when the failure was raised.
    double worst() const noexcept { return worst_; }

private:
    double worst_;
};

/// The root tuple has (near-)repeated roots and the requested claim is not defined for it.
class Degenerate : public Error {
public:
    using Error::Error;
};

/// A numerical check of an algebraic identity exceeded its tolerance.
class VerificationFailure : public Error {
public:
    VerificationFailure(const std::string& what, double observed)
        : Error(what), observed_(observed) {}

    double observed() const noexcept { return observed_; }

private:
    double observed_;
};

}  // namespace kq
