#include "minlag/geometry.hpp"
#include "minlag/errors.hpp"

#include <cmath>
#include <limits>

namespace minlag {

BoundaryPoint::BoundaryPoint(double p, double q) {
    const double n = std::hypot(p, q);
    if (!(n > 0.0) || !std::isfinite(n))
        throw DomainError("BoundaryPoint: homogeneous pair must be finite and nonzero");
    if (std::fabs(n - 1.0) > 4e-16) { // keep normalization idempotent
        p /= n;
        q /= n;
    }
    if (q < 0.0 || (q == 0.0 && p < 0.0)) {
        p = -p;
        q = -q;
    }
    p_ = p;
    q_ = q == 0.0 ? 0.0 : q; // collapse -0.0
}

double BoundaryPoint::affine() const {
    if (q_ == 0.0) return std::numeric_limits<double>::infinity();
    return p_ / q_;
}

double BoundaryPoint::circle_angle() const {
    return 2.0 * std::atan2(p_, q_);
}

Mobius::Mobius(double a, double b, double c, double d) {
    const double det = a * d - b * c;
    if (!(det > 0.0) || !std::isfinite(det))
        throw DomainError("Mobius: need ad - bc > 0");
    const double s = std::sqrt(det);
    a_ = a / s;
    b_ = b / s;
    c_ = c / s;
    d_ = d / s;
}

namespace {

// pj*qi - pi*qj, the homogeneous difference underlying xj - xi.
double hdiff(const BoundaryPoint& xi, const BoundaryPoint& xj) {
    return xj.p() * xi.q() - xi.p() * xj.q();
}

} // namespace

Quadruple::Quadruple(BoundaryPoint x1, BoundaryPoint x2, BoundaryPoint x3, BoundaryPoint x4)
    : pts_{x1, x2, x3, x4} {
    const double base = pts_[0].circle_angle();
    constexpr double two_pi = 6.283185307179586476925286766559;
    double prev = 0.0;
    for (int i = 1; i < 4; ++i) {
        double rel = pts_[i].circle_angle() - base;
        if (rel < 0.0) rel += two_pi;
        if (rel == 0.0 || rel == two_pi || rel == prev)
            throw DegenerateQuadruple("Quadruple: repeated boundary points");
        if (!(rel > prev))
            throw DomainError("Quadruple: points not positively cyclically ordered");
        prev = rel;
    }
}

double cross_ratio_raw(const BoundaryPoint& x1, const BoundaryPoint& x2,
                       const BoundaryPoint& x3, const BoundaryPoint& x4) {
    const double num = hdiff(x1, x4) * hdiff(x2, x3);
    const double den = hdiff(x1, x2) * hdiff(x4, x3);
    if (num == 0.0 && den == 0.0)
        throw DegenerateQuadruple("cross_ratio: repeated boundary points");
    if (den == 0.0)
        return num > 0.0 ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
    return num / den;
}

double cross_ratio(const Quadruple& q) {
    return cross_ratio_raw(q[0], q[1], q[2], q[3]);
}

BoundaryPoint complete_symmetric(const BoundaryPoint& x1, const BoundaryPoint& x2,
                                 const BoundaryPoint& x3) {
    const double d23 = hdiff(x2, x3);
    const double d12 = hdiff(x1, x2);
    if (d23 == 0.0 || d12 == 0.0 || hdiff(x1, x3) == 0.0)
        throw DegenerateQuadruple("complete_symmetric: coincident inputs");
    // Solving cr(x1,x2,x3,x4) = -1 homogeneously:
    //   x4 = (p1*d23 - p3*d12 : q1*d23 - q3*d12).
    return BoundaryPoint(x1.p() * d23 - x3.p() * d12, x1.q() * d23 - x3.q() * d12);
}

BoundaryPoint apply_mobius(const Mobius& m, const BoundaryPoint& x) {
    return BoundaryPoint(m.a() * x.p() + m.b() * x.q(), m.c() * x.p() + m.d() * x.q());
}

UhpPoint apply_mobius(const Mobius& m, const UhpPoint& z) {
    // (az + b)/(cz + d) for real coefficients with det 1.
    const double wr = m.c() * z.x + m.d();
    const double wi = m.c() * z.y;
    const double den = wr * wr + wi * wi;
    const double nr = m.a() * z.x + m.b();
    const double ni = m.a() * z.y;
    return {(nr * wr + ni * wi) / den, z.y / den};
}

UhpPoint band_to_uhp(const BandPoint& p) {
    const double ev = std::exp(p.v);
    return {ev * std::sin(p.u), ev * std::cos(p.u)};
}

BoundaryPoint band_boundary_to_rp1(BandSide side, double v) {
    // -e^v and e^v stay projective for large |v|: (sign * e^v : 1) = (sign : e^-v).
    const double sign = side == BandSide::minus ? -1.0 : 1.0;
    if (v > 0.0) return BoundaryPoint(sign, std::exp(-v));
    return BoundaryPoint(sign * std::exp(v), 1.0);
}

UhpPoint fermi_to_uhp(const FermiPoint& p) {
    const double et = std::exp(p.t);
    return {et * std::tanh(p.s), et / std::cosh(p.s)};
}

std::array<double, 4> christoffel_band(double u) {
    const double t = std::tan(u);
    return {t, t, -t, 0.0};
}

ChristoffelField band_christoffels() {
    return [](double u, double) {
        ChristoffelSymbols cs;
        const double t = std::tan(u);
        cs.g[0][0][0] = t;  // G^u_uu
        cs.g[1][0][1] = t;  // G^v_uv
        cs.g[1][1][0] = t;  // G^v_vu
        cs.g[0][1][1] = -t; // G^u_vv
        return cs;
    };
}

ChristoffelField fermi_christoffels() {
    return [](double s, double) {
        ChristoffelSymbols cs;
        const double th = std::tanh(s);
        cs.g[0][1][1] = -std::cosh(s) * std::sinh(s); // G^s_tt
        cs.g[1][0][1] = th;                           // G^t_st
        cs.g[1][1][0] = th;                           // G^t_ts
        return cs;
    };
}

namespace {

double curvature_once(const DiagonalMetric& m, double s, double t, double h) {
    const auto E = [&](double a, double b) {
        const double v = m.E(a, b);
        if (!(v > 0.0)) throw NonPositiveMetric("fd_gaussian_curvature: E <= 0 on stencil");
        return v;
    };
    const auto G = [&](double a, double b) {
        const double v = m.G(a, b);
        if (!(v > 0.0)) throw NonPositiveMetric("fd_gaussian_curvature: G <= 0 on stencil");
        return v;
    };
    // K = -1/(2 sqrt(EG)) [ d/ds( G_s/sqrt(EG) ) + d/dt( E_t/sqrt(EG) ) ]
    const auto P = [&](double a, double b) {
        const double gs = (G(a + h, b) - G(a - h, b)) / (2.0 * h);
        return gs / std::sqrt(E(a, b) * G(a, b));
    };
    const auto Q = [&](double a, double b) {
        const double et = (E(a, b + h) - E(a, b - h)) / (2.0 * h);
        return et / std::sqrt(E(a, b) * G(a, b));
    };
    const double dP = (P(s + h, t) - P(s - h, t)) / (2.0 * h);
    const double dQ = (Q(s, t + h) - Q(s, t - h)) / (2.0 * h);
    return -(dP + dQ) / (2.0 * std::sqrt(E(s, t) * G(s, t)));
}

} // namespace

double fd_gaussian_curvature(const DiagonalMetric& m, double s, double t, double h) {
    if (!(h > 0.0)) throw DomainError("fd_gaussian_curvature: need h > 0");
    const double coarse = curvature_once(m, s, t, h);
    const double fine = curvature_once(m, s, t, 0.5 * h);
    return fine + (fine - coarse) / 3.0;
}

} // namespace minlag
