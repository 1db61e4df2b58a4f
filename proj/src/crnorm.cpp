#include "minlag/crnorm.hpp"
#include "minlag/errors.hpp"
#include "minlag/neldermead.hpp"
#include "minlag/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace minlag {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double wrap_angle_gap(double a, double b) {
    double d = std::fabs(a - b);
    if (d > std::numbers::pi) d = kTwoPi - d;
    return d;
}

} // namespace

double distortion(const BoundaryMap& phi, const Quadruple& q) {
    const double cr = cross_ratio(q);
    if (!(std::fabs(cr + 1.0) <= 1e-9))
        throw DomainError("distortion: quadruple is not symmetric (cr != -1)");
    BoundaryPoint img[4];
    for (int i = 0; i < 4; ++i) img[i] = phi(q[i]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (wrap_angle_gap(img[i].circle_angle(), img[j].circle_angle()) < 1e-13)
                throw DegenerateQuadruple("distortion: image points collide");
    const double icr = cross_ratio_raw(img[0], img[1], img[2], img[3]);
    return std::fabs(std::log(std::fabs(icr)));
}

namespace {

BoundaryPoint point_from_angle(double theta) {
    return BoundaryPoint(std::sin(0.5 * theta), std::cos(0.5 * theta));
}

double softplus(double x) {
    if (x > 30.0) return x;
    return std::log1p(std::exp(x));
}

double inv_softplus(double y) { return std::log(std::expm1(y)); }

// Objective over (theta1, l1, l2): the symmetric quadruple with angles
// theta1 < theta2 < theta3 (softplus increments) and theta4 the symmetric
// completion. Returns the distortion, or -inf outside the chart / at
// degenerate images, which the simplex treats as the worst value.
struct SymmetricQuadrupleObjective {
    const BoundaryMap& phi;

    double operator()(const std::array<double, 3>& v) const {
        const double d1 = softplus(v[1]);
        const double d2 = softplus(v[2]);
        if (!(d1 + d2 < kTwoPi - 1e-9)) return kNegInf;
        const auto qopt = build(v);
        if (!qopt) return kNegInf;
        try {
            return distortion(phi, *qopt);
        } catch (const DegenerateQuadruple&) {
            return kNegInf;
        } catch (const DomainError&) {
            // near-degenerate triples make the symmetric completion lose the
            // cr = -1 precondition to cancellation; score them as invalid
            return kNegInf;
        }
    }

    std::optional<Quadruple> build(const std::array<double, 3>& v) const {
        const double t1 = v[0];
        const double t2 = t1 + softplus(v[1]);
        const double t3 = t2 + softplus(v[2]);
        try {
            const BoundaryPoint x1 = point_from_angle(t1);
            const BoundaryPoint x2 = point_from_angle(t2);
            const BoundaryPoint x3 = point_from_angle(t3);
            const BoundaryPoint x4 = complete_symmetric(x1, x2, x3);
            return Quadruple(x1, x2, x3, x4);
        } catch (const DegenerateQuadruple&) {
            return std::nullopt;
        } catch (const DomainError&) {
            return std::nullopt;
        }
    }
};

} // namespace

NormEstimate estimate_norm(const BoundaryMap& phi, const NormEstimatorConfig& cfg) {
    if (cfg.starts < 1) throw DomainError("estimate_norm: need at least one start");
    const SymmetricQuadrupleObjective obj{phi};

    std::vector<std::array<double, 3>> starts;
    starts.reserve(static_cast<std::size_t>(cfg.starts) + 2);
    if (cfg.family_seeds) {
        const double half = inv_softplus(std::numbers::pi / 2.0);
        // the earthquake optimum (-1, 0, 1, inf) and the reflection-symmetric
        // power optimum (-(sqrt2+1), 1-sqrt2, sqrt2-1, sqrt2+1)
        starts.push_back({-std::numbers::pi / 2.0, half, half});
        starts.push_back({-0.75 * std::numbers::pi, half, half});
    }
    std::mt19937 rng(cfg.rng_seed);
    std::uniform_real_distribution<double> ut(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> ul(-2.5, 1.5);
    for (int i = 0; i < cfg.starts; ++i) starts.push_back({ut(rng), ul(rng), ul(rng)});

    struct StartResult {
        double value = kNegInf;
        std::array<double, 3> x{};
    };
    std::vector<StartResult> results(starts.size());
    parallel_for(starts.size(), [&](std::size_t i) {
        const auto neg = [&](const std::array<double, 3>& v) { return -obj(v); };
        const auto r = nelder_mead_3(neg, starts[i], 0.35, cfg.simplex_tol, cfg.max_iters);
        results[i] = {-r.value, r.x};
    });

    std::vector<std::size_t> order(results.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return results[a].value > results[b].value;
    });

    NormEstimate est;
    est.starts_used = static_cast<int>(starts.size());
    const auto& best = results[order[0]];
    est.argmax = obj.build(best.x);
    // re-evaluate at the argmax so value and quadruple agree exactly
    const double v = est.argmax ? obj(best.x) : kNegInf;
    if (std::isfinite(v)) {
        est.value = v;
    } else {
        est.argmax.reset();
        est.value = 0.0;
    }
    if (order.size() >= 3) {
        const double spread = results[order[0]].value - results[order[2]].value;
        est.converged = std::isfinite(results[order[2]].value) &&
                        spread <= cfg.stability_rel * (1.0 + std::fabs(results[order[0]].value));
    }
    return est;
}

double reference_norm_earthquake(double lambda) {
    if (!(lambda >= 0.0)) throw DomainError("reference_norm_earthquake: need lambda >= 0");
    return lambda;
}

double reference_lower_bound_power(double alpha) {
    if (!(alpha >= 1.0)) throw DomainError("reference_lower_bound_power: need alpha >= 1");
    // log(2^alpha - 1)
    const double log2 = std::numbers::ln2;
    const double b1 = alpha * log2 + std::log1p(-std::exp(-alpha * log2));
    // 2 log((sqrt2+1)^alpha - (sqrt2-1)^alpha) - log 4, via
    // A^alpha - B^alpha = 2 + A expm1(h lnA) - B expm1(-h lnA), h = alpha - 1;
    // for large alpha that expm1 overflows and the log form (exact there,
    // cancelling near 1) takes over
    const double A = std::sqrt(2.0) + 1.0;
    const double B = std::sqrt(2.0) - 1.0;
    const double lnA = std::log1p(std::sqrt(2.0));
    const double h = alpha - 1.0;
    double b2;
    if (h * lnA < 300.0) {
        const double d = A * std::expm1(h * lnA) - B * std::expm1(-h * lnA);
        b2 = 2.0 * std::log1p(0.5 * d);
    } else {
        // B^alpha = A^-alpha: 2 log(A^alpha (1 - A^-2alpha)) - log 4
        b2 = 2.0 * alpha * lnA + 2.0 * std::log1p(-std::exp(-2.0 * alpha * lnA)) -
             std::log(4.0);
    }
    return std::max(b1, b2);
}

} // namespace minlag
