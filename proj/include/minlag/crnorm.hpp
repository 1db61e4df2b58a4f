#pragma once

#include "minlag/geometry.hpp"

#include <functional>
#include <optional>

namespace minlag {

using BoundaryMap = std::function<BoundaryPoint(const BoundaryPoint&)>;

/// Cross-ratio distortion |log|cr(phi(Q))|| of a symmetric quadruple
/// (the precondition |cr(Q) + 1| <= 1e-9 is checked). Throws
/// DegenerateQuadruple when two image points come within 1e-13 on the circle.
double distortion(const BoundaryMap& phi, const Quadruple& q);

struct NormEstimatorConfig {
    int starts = 64;             // quasi-random starts
    unsigned rng_seed = 0x5eed;  // fixed: the sup can sit on a continuum,
                                 // reproducibility needs frozen seeding
    bool family_seeds = true;    // also start at the known-optimal shapes
    int max_iters = 400;
    double simplex_tol = 1e-13;
    double stability_rel = 1e-8; // top-three agreement declaring convergence
};

struct NormEstimate {
    double value = 0.0;
    std::optional<Quadruple> argmax;
    int starts_used = 0;
    bool converged = false;
};

/// Estimate of sup over symmetric quadruples of the distortion, by
/// multi-start Nelder-Mead over three circle angles (the fourth point is
/// the symmetric completion). Degenerate image quadruples score -inf; the
/// best-so-far estimate is always returned, with converged = false when the
/// top three starts disagree beyond stability_rel.
NormEstimate estimate_norm(const BoundaryMap& phi, const NormEstimatorConfig& cfg = {});

/// ||phi_lambda||_cr = lambda, exactly.
double reference_norm_earthquake(double lambda);

/// Closed-form lower bound for ||psi_alpha||_cr: the larger of
/// log(2^alpha - 1) and 2 log((sqrt2+1)^alpha - (sqrt2-1)^alpha) - log 4,
/// both in cancellation-safe form near alpha = 1.
double reference_lower_bound_power(double alpha);

} // namespace minlag
