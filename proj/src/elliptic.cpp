#include "minlag/elliptic.hpp"
#include "minlag/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace minlag {

namespace {

// AGM for K and E in one pass. b0 is the complementary modulus sqrt(1-k^2)
// and c0sq = k^2; both are supplied by the caller so that near k = 1 the
// complementary parameter enters without cancellation.
struct AgmResult {
    double agm;
    double correction; // sum 2^{n-1} c_n^2, with c_0^2 = k^2
};

AgmResult agm_iterate(double b0, double c0sq) {
    double a = 1.0;
    double b = b0;
    double sum = 0.5 * c0sq;
    double pow2 = 1.0;
    for (int n = 0; n < 64; ++n) {
        if (std::fabs(a - b) <= 1e-16 * a) break;
        const double c = 0.5 * (a - b);
        sum += pow2 * c * c;
        pow2 *= 2.0;
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return {a, sum};
}

} // namespace

double elliptic_K(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("elliptic_K: need 0 <= k < 1");
    const double eps = (1.0 - k) * (1.0 + k);
    return std::numbers::pi / (2.0 * agm_iterate(std::sqrt(eps), k * k).agm);
}

double elliptic_K_from_eps(double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("elliptic_K_from_eps: need 0 < eps <= 1");
    return std::numbers::pi / (2.0 * agm_iterate(std::sqrt(eps), 1.0 - eps).agm);
}

double elliptic_E(double k) {
    if (!(k >= 0.0 && k <= 1.0)) throw DomainError("elliptic_E: need 0 <= k <= 1");
    if (k == 1.0) return 1.0;
    const double eps = (1.0 - k) * (1.0 + k);
    const auto r = agm_iterate(std::sqrt(eps), k * k);
    return std::numbers::pi / (2.0 * r.agm) * (1.0 - r.correction);
}

double elliptic_E_from_eps(double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw DomainError("elliptic_E_from_eps: need 0 < eps <= 1");
    const auto r = agm_iterate(std::sqrt(eps), 1.0 - eps);
    return std::numbers::pi / (2.0 * r.agm) * (1.0 - r.correction);
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton iteration
// on the Legendre recurrence. Machine precision, no tabulated digits.
template <int N>
struct GaussRule {
    std::array<double, N> node{};
    std::array<double, N> weight{};

    GaussRule() {
        for (int i = 0; i < N; ++i) {
            // Tricomi-style initial guess, then Newton.
            double x = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
            double p1 = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0;
                p1 = x;
                for (int n = 2; n <= N; ++n) {
                    const double pn = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
                    p0 = p1;
                    p1 = pn;
                }
                const double dp = N * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::fabs(dx) < 1e-15) {
                    // one polishing pass, then recompute derivative for the weight
                    p0 = 1.0;
                    p1 = x;
                    for (int n = 2; n <= N; ++n) {
                        const double pn = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
                        p0 = p1;
                        p1 = pn;
                    }
                    const double dpf = N * (x * p1 - p0) / (x * x - 1.0);
                    node[i] = x;
                    weight[i] = 2.0 / ((1.0 - x * x) * dpf * dpf);
                    break;
                }
            }
        }
    }
};

const GaussRule<7>& rule7() {
    static const GaussRule<7> r;
    return r;
}
const GaussRule<15>& rule15() {
    static const GaussRule<15> r;
    return r;
}

struct PanelEstimate {
    double coarse;
    double fine;
};

PanelEstimate gauss_pair(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double g7 = 0.0;
    for (int i = 0; i < 7; ++i) g7 += rule7().weight[i] * f(mid + half * rule7().node[i]);
    double g15 = 0.0;
    for (int i = 0; i < 15; ++i) g15 += rule15().weight[i] * f(mid + half * rule15().node[i]);
    return {g7 * half, g15 * half};
}

double quad_recursive(const std::function<double(double)>& f, double a, double b,
                      double abs_tol, double rel_tol, int depth) {
    const auto est = gauss_pair(f, a, b);
    const double err = std::fabs(est.fine - est.coarse);
    if (err <= std::max(abs_tol, rel_tol * std::fabs(est.fine))) return est.fine;
    if (depth <= 0)
        throw NoConvergence("adaptive_quad: max_depth reached, err=" + std::to_string(err));
    const double mid = 0.5 * (a + b);
    return quad_recursive(f, a, mid, 0.5 * abs_tol, rel_tol, depth - 1) +
           quad_recursive(f, mid, b, 0.5 * abs_tol, rel_tol, depth - 1);
}

} // namespace

double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg) {
    if (!(a < b)) throw DomainError("adaptive_quad: need a < b");
    if (!(cfg.rel_tol > 0.0 && cfg.abs_tol > 0.0 && cfg.max_depth >= 10))
        throw DomainError("adaptive_quad: invalid QuadratureConfig");
    return quad_recursive(f, a, b, cfg.abs_tol, cfg.rel_tol, cfg.max_depth);
}

} // namespace minlag
