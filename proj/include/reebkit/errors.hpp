#pragma once

#include <stdexcept>
#include <string>

namespace reebkit {

/// Input violates a documented precondition (bad interval, non-tangent vector, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical procedure could not reach its stated accuracy.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Step size fell below the floor during ODE integration.
class IntegrationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Sampling too coarse for reliable phase tracking; caller should refine.
class RefinementRequired : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Input is degenerate (orbit families not isolated, eigenvalue at zero, ...).
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested construction is outside the supported family.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace reebkit
