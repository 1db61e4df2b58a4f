#pragma once

#include <array>
#include <cmath>

namespace minlag {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
};

/// Plain 2x2 matrix, row major.
struct Mat2 {
    double a = 1.0, b = 0.0; // [a b]
    double c = 0.0, d = 1.0; // [c d]

    static Mat2 identity() { return {}; }
    static Mat2 diag(double p, double q) { return {p, 0.0, 0.0, q}; }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    bool symmetric(double tol = 0.0) const { return std::fabs(b - c) <= tol; }

    Mat2 transpose() const { return {a, c, b, d}; }

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    Mat2 inverse() const {
        const double dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    double max_abs() const {
        return std::max(std::max(std::fabs(a), std::fabs(b)),
                        std::max(std::fabs(c), std::fabs(d)));
    }

    /// Eigenvalues of a symmetric matrix, larger first. The discriminant is
    /// formed from (a-d)/2 and the off-diagonal, not from m^2 - det, which
    /// cancels catastrophically near multiples of the identity.
    std::array<double, 2> sym_eigenvalues() const {
        const double m = 0.5 * trace();
        const double disc = std::hypot(0.5 * (a - d), 0.5 * (b + c));
        return {m + disc, m - disc};
    }
};

} // namespace minlag
