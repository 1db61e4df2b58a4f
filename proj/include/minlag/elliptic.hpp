#pragma once

#include <functional>

namespace minlag {

struct QuadratureConfig {
    double rel_tol = 1e-11;
    double abs_tol = 1e-14;
    int max_depth = 60;
};

/// Complete elliptic integral of the first kind,
/// K(k) = \int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta),
/// by the arithmetic-geometric mean iteration. Domain 0 <= k < 1.
double elliptic_K(double k);

/// K with the complementary parameter eps = 1 - k^2 passed directly, so call
/// sites near k = 1 never form 1 - k^2 themselves. Domain 0 < eps <= 1.
double elliptic_K_from_eps(double eps);

/// Complete elliptic integral of the second kind,
/// E(k) = \int_0^{pi/2} sqrt(1 - k^2 sin^2 theta) dtheta,
/// by the AGM iteration with the c_n^2 correction sum. Domain 0 <= k <= 1.
double elliptic_E(double k);

/// E with eps = 1 - k^2 passed directly. Domain 0 < eps <= 1.
double elliptic_E_from_eps(double eps);

/// Adaptive quadrature of f over [a, b] with an embedded Gauss pair
/// (7 and 15 point rules) and interval bisection. Deterministic given cfg.
/// Throws NoConvergence when max_depth is exhausted before the tolerance.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg = {});

} // namespace minlag
