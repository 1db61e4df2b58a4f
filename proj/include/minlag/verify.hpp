#pragma once

#include <string>
#include <vector>

namespace minlag {

struct CheckResult {
    std::string name;
    double observed; // measured residual / error / order
    double bound;    // what it must satisfy (see cmp)
    std::string cmp; // "<=", ">=", or "in" (observed within +-bound of 0)
    bool pass;
};

CheckResult check_le(std::string name, double observed, double bound);
CheckResult check_ge(std::string name, double observed, double bound);

/// Closed-form ODE residuals of both families at 100 seeded random
/// parameter/point pairs each.
std::vector<CheckResult> verify_ode();

/// Finite-difference Codazzi residuals of both family b-fields decay at
/// second order under step halving.
std::vector<CheckResult> verify_codazzi();

/// Finite-difference Gaussian curvature of the power-family domain metric
/// is -1, plus the flat and hyperbolic-Fermi reference metrics.
std::vector<CheckResult> verify_curvature();

/// AGM elliptic integrals against quadrature, endpoint values, the near-1
/// logarithmic asymptotic, and the E/K ratio constant.
std::vector<CheckResult> verify_elliptic();

/// Numeric pullbacks against the closed-form matrices of both families.
std::vector<CheckResult> verify_pullback();

/// Numeric maximal dilatation against the closed forms of both families.
std::vector<CheckResult> verify_dilatation();

std::vector<CheckResult> run_suite(const std::string& name);
std::vector<std::string> suite_names();

} // namespace minlag
