#include "minlag/power.hpp"
#include "minlag/errors.hpp"

#include <cmath>

namespace minlag {

PowerParams PowerParams::from_a(double a) {
    if (!(a >= 0.0)) throw DomainError("PowerParams: need a >= 0");
    return PowerParams(a, std::sqrt(1.0 + a));
}

PowerParams PowerParams::from_alpha(double alpha) {
    if (!(alpha >= 1.0)) throw DomainError("PowerParams: need alpha >= 1");
    // a = alpha^2 - 1, kept accurate for alpha near 1.
    return PowerParams((alpha - 1.0) * (alpha + 1.0), alpha);
}

double g_profile(double a, double s) {
    if (!(a >= 0.0)) throw DomainError("g_profile: need a >= 0");
    const double sech = 1.0 / std::cosh(s);
    return std::sqrt(1.0 + a * sech * sech);
}

double ode_residual_power(const Profile& g, double s) {
    const double gs = g.value(s);
    if (gs == 0.0) throw DivisionByZero("ode_residual_power: g(s) = 0");
    return g.deriv(s) - std::tanh(s) * (1.0 / gs - gs);
}

Tensor2 b_tensor_power(double a, double s) {
    const double g = g_profile(a, s);
    return {Mat2::diag(1.0 / g, g), Frame::coordinate};
}

DiagonalCoefficients domain_metric_power(double a, double s) {
    const double g2 = 1.0 + a / (std::cosh(s) * std::cosh(s));
    const double ch = std::cosh(s);
    return {1.0 / g2, g2 * ch * ch};
}

FermiPoint apply_g_a(double a, const FermiPoint& p) {
    if (!(a >= 0.0)) throw DomainError("apply_g_a: need a >= 0");
    const double alpha = std::sqrt(1.0 + a);
    return {std::asinh(std::sinh(p.s) / alpha), alpha * p.t};
}

Mat2 jacobian_g_a(double a, const FermiPoint& p) {
    const double alpha = std::sqrt(1.0 + a);
    // d/ds arcsinh(sinh s / alpha) = cosh s / sqrt(alpha^2 + sinh^2 s)
    const double sh = std::sinh(p.s);
    return Mat2::diag(std::cosh(p.s) / std::sqrt(alpha * alpha + sh * sh), alpha);
}

BoundaryPoint boundary_psi(double alpha, const BoundaryPoint& x) {
    if (!(alpha >= 1.0)) throw DomainError("boundary_psi: need alpha >= 1");
    if (x.q() == 0.0) return x; // infinity is fixed
    // Scale so the larger homogeneous component is exactly 1 before raising
    // to alpha; the other lands in [0, 1], so nothing overflows and an
    // underflow collapses to the correct projective limit (0 or infinity).
    const double ap = std::fabs(x.p());
    const double m = std::max(ap, x.q());
    const double sign = x.p() < 0.0 ? -1.0 : 1.0;
    return BoundaryPoint(sign * std::pow(ap / m, alpha), std::pow(x.q() / m, alpha));
}

double max_dilatation_power(double a) {
    if (!(a >= 0.0)) throw DomainError("max_dilatation_power: need a >= 0");
    return 1.0 + a;
}

Tensor2 hessian_radial(const RadialFunction& r, double s) {
    return {Mat2::diag(r.d2(s) - r.value(s), r.d1(s) * std::tanh(s) - r.value(s)),
            Frame::orthonormal};
}

} // namespace minlag
