#include "minlag/qc.hpp"
#include "minlag/errors.hpp"
#include "minlag/parallel.hpp"

#include <cmath>

namespace minlag {

Metric2::Metric2(double E, double F, double G) : E_(E), F_(F), G_(G) {
    if (!(E > 0.0) || !(E * G - F * F > 0.0))
        throw NonPositiveMetric("Metric2: not positive definite");
}

bool is_self_adjoint(const Tensor2& b, const Metric2& g, double tol) {
    const Mat2 gb = b.frame == Frame::orthonormal ? b.m : g.mat() * b.m;
    return gb.symmetric(tol * (1.0 + gb.max_abs()));
}

Metric2 pullback_metric(const ChartMap& map, const MetricField& target_metric,
                        double x, double y, double h, const JacobianFn& analytic_jacobian) {
    if (!(h > 0.0)) throw DomainError("pullback_metric: need step > 0");
    Mat2 J;
    if (analytic_jacobian) {
        J = analytic_jacobian(x, y);
    } else {
        const Vec2 fx = (map(x + h, y) - map(x - h, y)) * (0.5 / h);
        const Vec2 fy = (map(x, y + h) - map(x, y - h)) * (0.5 / h);
        J = {fx.x, fy.x, fx.y, fy.y};
    }
    const Vec2 fp = map(x, y);
    const Mat2 g = target_metric(fp.x, fp.y).mat();
    const Mat2 res = J.transpose() * g * J;
    const double F = 0.5 * (res.b + res.c); // symmetrize roundoff
    return Metric2(res.a, F, res.d);
}

Mat2 spd_sqrt_2x2(const Mat2& m) {
    if (!m.symmetric(1e-12 * (1.0 + m.max_abs())) || !(m.a > 0.0) || !(m.det() > 0.0))
        throw NonPositiveMetric("spd_sqrt_2x2: matrix not SPD");
    const double sd = std::sqrt(m.det());
    const double denom = std::sqrt(m.trace() + 2.0 * sd);
    return (m + Mat2::diag(sd, sd)) * (1.0 / denom);
}

DilatationSample dilatation_at(const ChartMap& map, const MetricField& source_metric,
                               const MetricField& target_metric, double x, double y,
                               double h, const JacobianFn& jac) {
    const Mat2 pb = pullback_metric(map, target_metric, x, y, h, jac).mat();
    const Mat2 s_half = spd_sqrt_2x2(source_metric(x, y).mat());
    const Mat2 s_half_inv = s_half.inverse();
    // b^2 expressed in an orthonormal frame of the source metric; symmetric,
    // so eta+- are ordinary eigenvalues of its SPD root.
    Mat2 b2 = s_half_inv * pb * s_half_inv;
    const double off = 0.5 * (b2.b + b2.c);
    b2.b = b2.c = off;
    const Mat2 b = spd_sqrt_2x2(b2);
    const auto eta = b.sym_eigenvalues();
    return {x, y, eta[0], eta[1], eta[0] / eta[1]};
}

std::vector<DilatationSample> dilatation_field(const ChartMap& map,
                                               const MetricField& source_metric,
                                               const MetricField& target_metric,
                                               const GridSpec& grid, double h,
                                               const JacobianFn& jac) {
    if (grid.nx < 1 || grid.ny < 1) throw DomainError("dilatation_field: empty grid");
    std::vector<DilatationSample> out(static_cast<std::size_t>(grid.nx) * grid.ny);
    parallel_for(out.size(), [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / grid.ny;
        const int j = static_cast<int>(idx) % grid.ny;
        const double x = grid.nx == 1 ? grid.x_lo
                                      : grid.x_lo + (grid.x_hi - grid.x_lo) * i / (grid.nx - 1);
        const double y = grid.ny == 1 ? grid.y_lo
                                      : grid.y_lo + (grid.y_hi - grid.y_lo) * j / (grid.ny - 1);
        out[idx] = dilatation_at(map, source_metric, target_metric, x, y, h, jac);
    });
    return out;
}

MaxDilatation max_dilatation_numeric(const ChartMap& map, const MetricField& source_metric,
                                     const MetricField& target_metric, const GridSpec& grid,
                                     double h, const JacobianFn& jac) {
    const auto samples = dilatation_field(map, source_metric, target_metric, grid, h, jac);
    std::size_t best = 0;
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].K_point > samples[best].K_point) best = i;

    const double y = samples[best].y;
    const auto K_at = [&](double x) {
        return dilatation_at(map, source_metric, target_metric, x, y, h, jac).K_point;
    };
    // Golden-section refinement along the first coordinate, one grid cell
    // around the argmax.
    const double dx = grid.nx > 1 ? (grid.x_hi - grid.x_lo) / (grid.nx - 1) : 0.0;
    double lo = std::max(grid.x_lo, samples[best].x - dx);
    double hi = std::min(grid.x_hi, samples[best].x + dx);
    if (hi <= lo) return {samples[best].K_point, samples[best].x, samples[best].y};
    constexpr double invphi = 0.6180339887498949;
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double fc = K_at(c), fd = K_at(d);
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - invphi * (hi - lo);
            fc = K_at(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (hi - lo);
            fd = K_at(d);
        }
    }
    const double xm = 0.5 * (lo + hi);
    const double Km = K_at(xm);
    if (Km >= samples[best].K_point) return {Km, xm, y};
    return {samples[best].K_point, samples[best].x, y};
}

Vec2 codazzi_residual_numeric(const TensorField& b, const ChristoffelField& gamma,
                              double x, double y, double step) {
    if (!(step > 0.0)) throw DomainError("codazzi_residual_numeric: need step > 0");
    const Mat2 dxb = (b(x + step, y) - b(x - step, y)) * (0.5 / step);
    const Mat2 dyb = (b(x, y + step) - b(x, y - step)) * (0.5 / step);
    const Mat2 bv = b(x, y);
    const auto cs = gamma(x, y);
    // R^i = d_1 b^i_2 - d_2 b^i_1 + G^i_{1m} b^m_2 - G^i_{2m} b^m_1
    const double bcol1[2] = {bv.a, bv.c}; // b(d_1)
    const double bcol2[2] = {bv.b, bv.d}; // b(d_2)
    const double d1b2[2] = {dxb.b, dxb.d};
    const double d2b1[2] = {dyb.a, dyb.c};
    Vec2 r{};
    double out[2];
    for (int i = 0; i < 2; ++i) {
        double v = d1b2[i] - d2b1[i];
        for (int m = 0; m < 2; ++m)
            v += cs.g[i][0][m] * bcol2[m] - cs.g[i][1][m] * bcol1[m];
        out[i] = v;
    }
    r.x = out[0];
    r.y = out[1];
    return r;
}

} // namespace minlag
