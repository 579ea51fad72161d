#pragma once

#include <stdexcept>
#include <string>

namespace layerstab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user input: negative coefficients, broken triangle conditions,
/// malformed spectra.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain on which a formula is defined or guarded.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested at the singular point of a kernel.
class SingularPointError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Requested case is well defined but not covered by the available theory
/// (e.g. monolayer stability with unequal U-0 and V-0 tensions).
class UnsupportedCaseError : public Error {
public:
    using Error::Error;
};

/// Too few samples to resolve the requested number of Fourier modes.
class AliasingError : public Error {
public:
    using Error::Error;
};

/// Perturbed interfaces touch or cross.
class CrossingError : public Error {
public:
    CrossingError(const std::string& what, double x1) : Error(what), x1_(x1) {}
    double x1() const noexcept { return x1_; }

private:
    double x1_;
};

/// A numerical procedure did not reach its target accuracy.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace layerstab
