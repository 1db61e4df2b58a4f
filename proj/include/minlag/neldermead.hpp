#pragma once

#include <array>
#include <functional>

namespace minlag {

struct NelderMeadResult {
    std::array<double, 3> x{};
    double value = 0.0;
    int iterations = 0;
};

/// Derivative-free simplex minimization in three variables with the standard
/// reflection/expansion/contraction/shrink coefficients. Stops when the
/// simplex function spread falls below f_tol or max_iters is reached.
NelderMeadResult nelder_mead_3(const std::function<double(const std::array<double, 3>&)>& f,
                               const std::array<double, 3>& start, double initial_step,
                               double f_tol, int max_iters);

} // namespace minlag
