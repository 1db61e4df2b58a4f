#pragma once

#include "minlag/mat2.hpp"

#include <array>
#include <functional>

namespace minlag {

/// Point of RP^1 = R u {inf} in homogeneous coordinates x = p/q, normalized
/// to p^2 + q^2 = 1 with q >= 0 (and p > 0 when q = 0, so inf is (1, 0)).
/// Keeping infinity an ordinary point lets the cross-ratio, the Moebius
/// action and the norm optimizer pass through it with no special cases.
class BoundaryPoint {
public:
    BoundaryPoint() : p_(0.0), q_(1.0) {} // the point 0
    BoundaryPoint(double p, double q);

    static BoundaryPoint from_affine(double x) { return BoundaryPoint(x, 1.0); }
    static BoundaryPoint infinity() { return BoundaryPoint(1.0, 0.0); }

    double p() const { return p_; }
    double q() const { return q_; }

    bool is_infinite() const { return q_ == 0.0; }
    /// Affine coordinate; +inf for the point at infinity.
    double affine() const;

    /// Position on the circle: 2*atan2(p, q) in (-pi, pi], strictly
    /// increasing in the affine coordinate, with infinity at pi.
    double circle_angle() const;

    bool operator==(const BoundaryPoint& o) const { return p_ == o.p_ && q_ == o.q_; }

private:
    double p_, q_;
};

struct UhpPoint {
    double x;
    double y; // y > 0
};

/// Point of the band chart {|u| < pi/2}, metric (du^2 + dv^2)/cos^2 u.
struct BandPoint {
    double u;
    double v;
};

/// Fermi coordinates about a geodesic: s the signed distance, t the
/// arclength along it; metric ds^2 + cosh^2(s) dt^2.
struct FermiPoint {
    double s;
    double t;
};

/// Element of PSL(2, R), stored with ad - bc normalized to 1.
class Mobius {
public:
    Mobius() : a_(1), b_(0), c_(0), d_(1) {}
    Mobius(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    Mobius inverse() const { return Mobius(d_, -b_, -c_, a_); }
    Mobius operator*(const Mobius& o) const {
        return Mobius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                      c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
    }

private:
    double a_, b_, c_, d_;
};

/// Positively ordered quadruple of pairwise distinct boundary points.
/// Construction validates cyclic order through the circle angles, with
/// strict comparisons (no tolerance), so degenerate input is rejected
/// deterministically.
class Quadruple {
public:
    Quadruple(BoundaryPoint x1, BoundaryPoint x2, BoundaryPoint x3, BoundaryPoint x4);

    const BoundaryPoint& operator[](int i) const { return pts_[i]; }

private:
    std::array<BoundaryPoint, 4> pts_;
};

/// Cross-ratio (x4-x1)(x3-x2) / ((x2-x1)(x3-x4)), evaluated projectively.
/// For a positively ordered quadruple the value is finite, nonzero and
/// negative. cross_ratio_raw skips the Quadruple validation (used on image
/// quadruples whose ordering is only known up to roundoff).
double cross_ratio(const Quadruple& q);
double cross_ratio_raw(const BoundaryPoint& x1, const BoundaryPoint& x2,
                       const BoundaryPoint& x3, const BoundaryPoint& x4);

/// The unique x4 with cr(x1, x2, x3, x4) = -1, solved in homogeneous
/// coordinates (a zero denominator yields infinity).
BoundaryPoint complete_symmetric(const BoundaryPoint& x1, const BoundaryPoint& x2,
                                 const BoundaryPoint& x3);

BoundaryPoint apply_mobius(const Mobius& m, const BoundaryPoint& x);
UhpPoint apply_mobius(const Mobius& m, const UhpPoint& z);

/// Band chart into the upper half-plane: z = i exp(-i(u+iv)),
/// i.e. (u, v) -> e^v (sin u, cos u).
UhpPoint band_to_uhp(const BandPoint& p);

enum class BandSide { minus, plus };

/// Boundary extension of the band chart: side - gives -e^v, side + gives e^v.
BoundaryPoint band_boundary_to_rp1(BandSide side, double v);

/// Fermi chart into the upper half-plane: (s, t) -> e^t (tanh s + i sech s).
UhpPoint fermi_to_uhp(const FermiPoint& p);

/// Nonzero Christoffel symbols of the band metric at u:
/// (G^u_uu, G^v_vu, G^u_vv, G^v_uu) = (tan u, tan u, -tan u, 0);
/// every symbol not listed vanishes.
std::array<double, 4> christoffel_band(double u);

/// Full second-kind symbols gamma[i][j][k] = G^i_jk for a chart, as needed
/// by the covariant finite differences.
struct ChristoffelSymbols {
    double g[2][2][2] = {};
};
using ChristoffelField = std::function<ChristoffelSymbols(double, double)>;

ChristoffelField band_christoffels();
ChristoffelField fermi_christoffels();

/// Diagonal metric field (E, G) in an orthogonal chart.
struct DiagonalMetric {
    std::function<double(double, double)> E;
    std::function<double(double, double)> G;
};

/// Gaussian curvature of an orthogonal metric by central finite differences
/// of the Brioschi formula, Richardson-extrapolated over steps h and h/2.
/// Throws NonPositiveMetric if E or G is not positive on the stencil.
double fd_gaussian_curvature(const DiagonalMetric& m, double s, double t, double h = 1e-4);

/// Default finite-difference step in chart coordinates.
inline constexpr double kFdStep = 1e-4;

} // namespace minlag
