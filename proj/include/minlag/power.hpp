#pragma once

#include "minlag/geometry.hpp"
#include "minlag/mat2.hpp"
#include "minlag/qc.hpp"

#include <functional>

namespace minlag {

/// Parameter of the power-function family: a >= 0, with the boundary
/// exponent alpha = sqrt(1 + a) >= 1. Exponents below 1 belong to the
/// inverse family (same maximal dilatation); callers wanting alpha < 1
/// should compute with 1/alpha.
class PowerParams {
public:
    static PowerParams from_a(double a);
    static PowerParams from_alpha(double alpha);

    double a() const { return a_; }
    double alpha() const { return alpha_; }

private:
    PowerParams(double a, double alpha) : a_(a), alpha_(alpha) {}
    double a_, alpha_;
};

/// Eigenvalue profile g_a(s) = sqrt(1 + a sech^2 s) >= 1.
double g_profile(double a, double s);

/// Scalar profile with derivative, for the unit-determinant ODE residual.
struct Profile {
    std::function<double(double)> value;
    std::function<double(double)> deriv;
};

/// Residual of g' = tanh(s) (1/g - g) at s, i.e. g'(s) - tanh(s)(1/g - g).
/// Throws DivisionByZero when g(s) = 0.
double ode_residual_power(const Profile& g, double s);

/// b_a = diag(1/g_a, g_a) in the (ds, dt) frame (the matrix of a diagonal
/// operator is the same in the orthonormal frame). det = 1 by construction.
Tensor2 b_tensor_power(double a, double s);

/// Pulled-back metric coefficients (E, G) = (1/g_a^2, g_a^2 cosh^2 s).
struct DiagonalCoefficients {
    double E;
    double G;
};
DiagonalCoefficients domain_metric_power(double a, double s);

/// The isometry g_a in Fermi coordinates:
/// (s, t) -> (arcsinh(sinh s / sqrt(1+a)), sqrt(1+a) t).
/// It takes ds^2 + cosh^2 s dt^2 back to domain_metric_power, fixes (0, 0),
/// commutes with t-translations and with s -> -s.
FermiPoint apply_g_a(double a, const FermiPoint& p);
Mat2 jacobian_g_a(double a, const FermiPoint& p);

/// Boundary value: the sign-odd power map x -> sign(x) |x|^alpha, with
/// infinity fixed. Evaluated on the normalized homogeneous pair so no
/// exponent overflows.
BoundaryPoint boundary_psi(double alpha, const BoundaryPoint& x);

/// K(g_a) = 1 + a.
double max_dilatation_power(double a);

/// Scalar profile with two derivatives, for the Hessian construction.
struct RadialFunction {
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
};

/// Hess(rho) - rho * Id for rho(s, t) = r(s), in the orthonormal frame
/// (d_s, d_t / cosh s): diag(r'' - r, r' tanh s - r).
Tensor2 hessian_radial(const RadialFunction& r, double s);

} // namespace minlag
