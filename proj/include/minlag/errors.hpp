#pragma once

#include <stdexcept>
#include <string>

namespace minlag {

/// Input outside the documented domain of an operation.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A boundary quadruple with coincident (or non cyclically ordered) points.
struct DegenerateQuadruple : std::runtime_error {
    explicit DegenerateQuadruple(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive integration or iteration failed to meet its tolerance.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix that must be symmetric positive definite is not.
struct NonPositiveMetric : std::runtime_error {
    explicit NonPositiveMetric(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation at a point where the expression is singular.
struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

/// Root bracketing failed before bisection could start.
struct BisectionFailure : std::runtime_error {
    explicit BisectionFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace minlag
