#pragma once

#include <stdexcept>
#include <string>

namespace meixner {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Gamma function evaluated at a non-positive integer.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

/// Analytic continuation requested outside the admissible strip.
struct BranchError : Error {
    using Error::Error;
};

/// A quadrature did not reach the requested tolerance.
struct ConvergenceFailure : Error {
    using Error::Error;
};

/// Integrand returned NaN or Inf at an interior node.
struct NonFiniteIntegrand : ConvergenceFailure {
    using ConvergenceFailure::ConvergenceFailure;
};

/// Convolution of parameter sets with different alpha or beta.
struct IncompatibleParams : Error {
    using Error::Error;
};

/// Moment set outside the feasible region of the distribution family.
struct InfeasibleMoments : Error {
    using Error::Error;
};

/// Exponential moment E[e^M] does not exist for these parameters.
struct MomentExplosion : Error {
    using Error::Error;
};

/// Combined measure-change integrand is non-integrable under the strict
/// (Lebesgue) reading and was evaluated as a principal value.
struct SingularCombination : Error {
    using Error::Error;
};

/// Panel sums of a checked integral grow without bound.
struct DivergenceDetected : Error {
    using Error::Error;
};

} // namespace meixner
