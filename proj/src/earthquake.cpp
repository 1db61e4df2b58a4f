#include "minlag/earthquake.hpp"
#include "minlag/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace minlag {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kPeakSplitEps = 1e-6;
} // namespace

EarthquakeParams EarthquakeParams::from_k(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("EarthquakeParams: need 0 <= k < 1");
    return EarthquakeParams(k, k * k, (1.0 - k) * (1.0 + k));
}

EarthquakeParams EarthquakeParams::from_eps(double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("EarthquakeParams: need 0 < eps <= 1");
    const double k2 = 1.0 - eps;
    return EarthquakeParams(std::sqrt(k2), k2, eps);
}

double h_prime(const EarthquakeParams& p, double u) {
    if (!(std::fabs(u) <= kHalfPi)) throw DomainError("h_prime: need |u| <= pi/2");
    const double c = std::cos(u);
    const double s = std::sin(u);
    // 1 - k^4 cos^4 = (eps + k^2 sin^2)(1 + k^2 cos^2), cancellation-free.
    const double den = std::sqrt((p.eps() + p.k2() * s * s) * (1.0 + p.k2() * c * c));
    return 2.0 * p.k2() * c * c / den;
}

double h_second(const EarthquakeParams& p, double u) {
    if (!(std::fabs(u) < kHalfPi)) throw DomainError("h_second: need |u| < pi/2");
    const double c = std::cos(u);
    const double s = std::sin(u);
    const double q = (p.eps() + p.k2() * s * s) * (1.0 + p.k2() * c * c); // = 1 - k^4 cos^4
    return -4.0 * p.k2() * s * c / (q * std::sqrt(q));
}

namespace {

double integrate_h(const EarthquakeParams& p, double lo, double hi) {
    if (hi <= lo) return 0.0;
    const auto f = [&](double u) { return h_prime(p, u); };
    const QuadratureConfig cfg{};
    if (p.eps() >= kPeakSplitEps) return adaptive_quad(f, lo, hi, cfg);
    // Peak of width ~sqrt(eps) at u = 0: integrate the window |u| <= eps^{1/4}
    // separately so the adaptive depth stays bounded.
    const double w = std::pow(p.eps(), 0.25);
    double total = 0.0;
    const double a0 = lo, a1 = std::clamp(-w, lo, hi), a2 = std::clamp(w, lo, hi), a3 = hi;
    if (a1 > a0) total += adaptive_quad(f, a0, a1, cfg);
    if (a2 > a1) total += adaptive_quad(f, a1, a2, cfg);
    if (a3 > a2) total += adaptive_quad(f, a2, a3, cfg);
    return total;
}

} // namespace

double h_value(const EarthquakeParams& p, double u) {
    if (!(std::fabs(u) <= kHalfPi)) throw DomainError("h_value: need |u| <= pi/2");
    if (p.k2() == 0.0) return 0.0;
    return integrate_h(p, -kHalfPi, u);
}

double lambda_k(const EarthquakeParams& p) {
    if (p.k2() == 0.0) return 0.0;
    // even integrand
    return 2.0 * integrate_h(p, 0.0, kHalfPi);
}

BandPoint apply_f_k(const EarthquakeParams& p, const BandPoint& pt) {
    return {pt.u, pt.v + h_value(p, pt.u)};
}

EarthquakeMap::EarthquakeMap(const EarthquakeParams& p) : p_(p) {
    // Uniform knots plus a geometric cluster around the peak at u = 0 when
    // eps is small; h between neighboring knots is then a short quadrature.
    constexpr int kUniform = 129;
    knots_.reserve(kUniform + 96);
    for (int i = 0; i < kUniform; ++i)
        knots_.push_back(-kHalfPi + std::numbers::pi * i / (kUniform - 1));
    if (p.eps() > 0.0 && p.eps() < kPeakSplitEps) {
        const double inner = std::sqrt(p.eps());
        for (double w = std::pow(p.eps(), 0.25); w > inner; w *= 0.5) {
            knots_.push_back(-w);
            knots_.push_back(w);
        }
    }
    std::sort(knots_.begin(), knots_.end());
    knots_.erase(std::unique(knots_.begin(), knots_.end()), knots_.end());
    values_.resize(knots_.size(), 0.0);
    double acc = 0.0;
    for (std::size_t i = 1; i < knots_.size(); ++i) {
        acc += integrate_h(p_, knots_[i - 1], knots_[i]);
        values_[i] = acc;
    }
}

double EarthquakeMap::h(double u) const {
    if (!(std::fabs(u) <= kHalfPi)) throw DomainError("EarthquakeMap: need |u| <= pi/2");
    if (p_.k2() == 0.0) return 0.0;
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
    const std::size_t i = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
    return values_[i] + integrate_h(p_, knots_[i], u);
}

BoundaryPoint boundary_phi(double lambda, const BoundaryPoint& x) {
    if (!(lambda >= 0.0)) throw DomainError("boundary_phi: need lambda >= 0");
    if (x.p() <= 0.0 || x.q() == 0.0) return x; // x <= 0 and infinity are fixed
    return BoundaryPoint(std::exp(lambda) * x.p(), x.q());
}

Tensor2 b_tensor_earthquake(const EarthquakeParams& p, double u) {
    if (!(std::fabs(u) < kHalfPi)) throw DomainError("b_tensor_earthquake: need |u| < pi/2");
    const double hp = h_prime(p, u);
    const double tr = std::sqrt(4.0 + hp * hp);
    return {Mat2{(2.0 + hp * hp) / tr, hp / tr, hp / tr, 2.0 / tr}, Frame::coordinate};
}

double codazzi_residual_closed(double hp, double hpp, double u) {
    if (hp == 0.0)
        throw DivisionByZero("codazzi_residual_closed: ODE singular at h' = 0");
    return std::tan(u) + 2.0 * hpp / ((4.0 + hp * hp) * hp);
}

double max_dilatation_earthquake(const EarthquakeParams& p) {
    return (2.0 - p.eps()) / p.eps();
}

} // namespace minlag
