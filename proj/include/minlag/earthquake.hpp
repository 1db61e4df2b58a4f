#pragma once

#include "minlag/elliptic.hpp"
#include "minlag/geometry.hpp"
#include "minlag/mat2.hpp"
#include "minlag/qc.hpp"

#include <vector>

namespace minlag {

/// Parameter of the earthquake-extension family, k in [0, 1). The family
/// degenerates to the identity at k = 0 and leaves every compact set of
/// dilatations as k -> 1, so near-boundary members are constructed from the
/// complementary parameter eps = 1 - k^2 directly; eps is authoritative and
/// every formula that would form 1 - k^2 uses it instead.
class EarthquakeParams {
public:
    static EarthquakeParams from_k(double k);
    static EarthquakeParams from_eps(double eps);

    double k() const { return k_; }
    double k2() const { return k2_; }
    double eps() const { return eps_; }

private:
    EarthquakeParams(double k, double k2, double eps) : k_(k), k2_(k2), eps_(eps) {}
    double k_, k2_, eps_;
};

/// h'(u) = 2 k^2 cos^2 u / sqrt(1 - k^4 cos^4 u), the positive branch,
/// written as 2 k^2 cos^2 u / sqrt((eps + k^2 sin^2 u)(1 + k^2 cos^2 u))
/// so nothing cancels as k -> 1. Zero at u = +-pi/2.
double h_prime(const EarthquakeParams& p, double u);

/// Analytic derivative of h': -4 k^2 sin u cos u (1 - k^4 cos^4 u)^{-3/2}.
double h_second(const EarthquakeParams& p, double u);

/// h(u) = int_{-pi/2}^u h', with h(-pi/2) = 0. For eps < 1e-6 the integral
/// splits into the peak region |sigma| <= eps^{1/4} and the two tails.
double h_value(const EarthquakeParams& p, double u);

/// The earthquake weight lambda_k = h(pi/2).
double lambda_k(const EarthquakeParams& p);

/// The map f_k(u, v) = (u, v + h(u)) on the band.
BandPoint apply_f_k(const EarthquakeParams& p, const BandPoint& pt);

/// Cached profile of h for one k, for grid evaluation: h at precomputed
/// breakpoints plus a short local quadrature per query, so a full map over a
/// grid never re-integrates from -pi/2.
class EarthquakeMap {
public:
    explicit EarthquakeMap(const EarthquakeParams& p);

    const EarthquakeParams& params() const { return p_; }
    double h(double u) const;
    BandPoint operator()(const BandPoint& pt) const { return {pt.u, pt.v + h(pt.u)}; }
    Mat2 jacobian(const BandPoint& pt) const { return {1.0, 0.0, h_prime(p_, pt.u), 1.0}; }

private:
    EarthquakeParams p_;
    std::vector<double> knots_;
    std::vector<double> values_;
};

/// Boundary value of the extension: the simple left earthquake of weight
/// lambda, fixing x <= 0 and infinity, scaling x > 0 by e^lambda.
BoundaryPoint boundary_phi(double lambda, const BoundaryPoint& x);

/// The positive self-adjoint square root b with f_k^* g = g(b., b.), in
/// the (du, dv) frame: (1/sqrt(4 + h'^2)) [[2 + h'^2, h'], [h', 2]]. Unit
/// determinant; the matrix is the same in the conformal orthonormal frame.
Tensor2 b_tensor_earthquake(const EarthquakeParams& p, double u);

/// Residual of the Codazzi ODE tan u = -2 h'' / ((4 + h'^2) h'), as
/// tan u + 2 h'' / ((4 + h'^2) h'). Throws DivisionByZero when hp = 0
/// (the ODE is singular there; constant h is the k = 0 case).
double codazzi_residual_closed(double hp, double hpp, double u);

/// K(f_k) = (1 + k^2)/(1 - k^2), computed as (2 - eps)/eps.
double max_dilatation_earthquake(const EarthquakeParams& p);

} // namespace minlag
