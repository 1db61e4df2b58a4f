#include "minlag/power.hpp"
#include "minlag/errors.hpp"
#include "minlag/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace minlag;

namespace {
Profile analytic_profile(double a) {
    return {[a](double s) { return g_profile(a, s); },
            [a](double s) {
                const double sech2 = 1.0 / (std::cosh(s) * std::cosh(s));
                return -a * sech2 * std::tanh(s) / g_profile(a, s);
            }};
}
} // namespace

TEST_CASE("g profile values") {
    for (const double s : {-3.0, 0.0, 1.7}) CHECK(g_profile(0.0, s) == 1.0);
    CHECK(g_profile(3.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::fabs(g_profile(5.0, 20.0) - 1.0) < 1e-8);
    CHECK(std::fabs(g_profile(5.0, -20.0) - 1.0) < 1e-8);
    CHECK(g_profile(2.0, 1.3) == g_profile(2.0, -1.3)); // even
    CHECK_THROWS_AS(g_profile(-0.5, 0.0), DomainError);
}

TEST_CASE("unit-determinant ODE residual") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> ua(0.0, 10.0);
    std::uniform_real_distribution<double> us(-5.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        const Profile g = analytic_profile(ua(rng));
        CHECK(std::fabs(ode_residual_power(g, us(rng))) < 1e-9);
    }
    const Profile one{[](double) { return 1.0; }, [](double) { return 0.0; }};
    CHECK(ode_residual_power(one, 0.8) == 0.0);
    const Profile two{[](double) { return 2.0; }, [](double) { return 0.0; }};
    CHECK(ode_residual_power(two, 1.0) == doctest::Approx(1.5 * std::tanh(1.0)).epsilon(1e-15));
    const Profile zero{[](double) { return 0.0; }, [](double) { return 0.0; }};
    CHECK_THROWS_AS(ode_residual_power(zero, 0.5), DivisionByZero);
}

TEST_CASE("b tensor of the power family") {
    const Mat2 id = b_tensor_power(0.0, 0.9).m;
    CHECK(id.a == 1.0);
    CHECK(id.d == 1.0);
    const Mat2 b = b_tensor_power(3.0, 0.0).m;
    CHECK(b.a == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.d == doctest::Approx(2.0).epsilon(1e-15));
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> ua(0.0, 10.0);
    std::uniform_real_distribution<double> us(-4.0, 4.0);
    for (int i = 0; i < 50; ++i) CHECK(std::fabs(b_tensor_power(ua(rng), us(rng)).m.det() - 1.0) <= 1e-14);
}

TEST_CASE("domain metric and its curvature") {
    const auto flat = domain_metric_power(0.0, 0.7);
    CHECK(flat.E == doctest::Approx(1.0));
    CHECK(flat.G == doctest::Approx(std::cosh(0.7) * std::cosh(0.7)));
    const double a = 2.0;
    const DiagonalMetric m{[a](double s, double) { return domain_metric_power(a, s).E; },
                           [a](double s, double) { return domain_metric_power(a, s).G; }};
    CHECK(std::fabs(fd_gaussian_curvature(m, 0.7, 0.0) + 1.0) < 1e-4);
    // curvature-ratio identity: kappa(g(b.,b.)) = kappa(g)/det b = -1
    CHECK(std::fabs(b_tensor_power(a, 0.7).m.det() - 1.0) <= 1e-14);
}

TEST_CASE("apply_g_a: identity, axis stretch, symmetry") {
    const FermiPoint p0 = apply_g_a(0.0, {0.83, -0.4});
    CHECK(p0.s == doctest::Approx(0.83).epsilon(1e-15));
    CHECK(p0.t == doctest::Approx(-0.4).epsilon(1e-15));

    const double a = 2.4;
    const double alpha = std::sqrt(1.0 + a);
    const FermiPoint axis = apply_g_a(a, {0.0, 0.9});
    CHECK(axis.s == 0.0);
    CHECK(axis.t == doctest::Approx(alpha * 0.9).epsilon(1e-15));

    std::mt19937 rng(47);
    std::uniform_real_distribution<double> us(-4.0, 4.0);
    for (int i = 0; i < 50; ++i) {
        const double s = us(rng), t = us(rng), d = us(rng);
        const FermiPoint q1 = apply_g_a(a, {s, t + d});
        const FermiPoint q2 = apply_g_a(a, {s, t});
        CHECK(q1.s == q2.s); // commutes with translations exactly
        CHECK(q1.t - q2.t == doctest::Approx(alpha * d).epsilon(1e-12));
        const FermiPoint r = apply_g_a(a, {-s, t});
        CHECK(r.s == -q2.s); // commutes with the reflection exactly
        // closed-form identities of the first component
        const double sigma = q2.s;
        CHECK(std::sinh(sigma) ==
              doctest::Approx(std::sinh(s) / alpha).epsilon(1e-12));
        CHECK(std::cosh(sigma) * alpha ==
              doctest::Approx(g_profile(a, s) * std::cosh(s)).epsilon(1e-12));
    }
}

TEST_CASE("apply_g_a pullback oracle at the pinned point") {
    const double a = 2.0, s = 1.3, t = -0.4, h = 1e-5;
    const auto map = [a](double x, double y) { return apply_g_a(a, {x, y}); };
    const FermiPoint ps1 = map(s + h, t), ps0 = map(s - h, t);
    const FermiPoint pt1 = map(s, t + h), pt0 = map(s, t - h);
    const double js_s = (ps1.s - ps0.s) / (2 * h), js_t = (ps1.t - ps0.t) / (2 * h);
    const double jt_s = (pt1.s - pt0.s) / (2 * h), jt_t = (pt1.t - pt0.t) / (2 * h);
    const double ch = std::cosh(map(s, t).s);
    const double E = js_s * js_s + ch * ch * js_t * js_t;
    const double F = js_s * jt_s + ch * ch * js_t * jt_t;
    const double G = jt_s * jt_s + ch * ch * jt_t * jt_t;
    const auto want = domain_metric_power(a, s);
    CHECK(std::fabs(E - want.E) < 1e-8 * (1.0 + want.E));
    CHECK(std::fabs(G - want.G) < 1e-8 * (1.0 + want.G));
    CHECK(std::fabs(F) < 1e-8 * (1.0 + want.G));
}

TEST_CASE("boundary power map") {
    for (const double al : {1.0, 2.0, 3.5}) {
        CHECK(boundary_psi(al, BoundaryPoint::from_affine(0.0)).affine() == 0.0);
        CHECK(boundary_psi(al, BoundaryPoint::from_affine(1.0)).affine() ==
              doctest::Approx(1.0).epsilon(1e-14));
        CHECK(boundary_psi(al, BoundaryPoint::infinity()).is_infinite());
    }
    CHECK(boundary_psi(2.0, BoundaryPoint::from_affine(3.0)).affine() ==
          doctest::Approx(9.0).epsilon(1e-13));
    CHECK(boundary_psi(2.0, BoundaryPoint::from_affine(-3.0)).affine() ==
          doctest::Approx(-9.0).epsilon(1e-13));
    CHECK_THROWS_AS(boundary_psi(0.5, BoundaryPoint::from_affine(1.0)), DomainError);

    // scaling conjugation psi(lx) = l^alpha psi(x)
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> ux(-4.0, 4.0);
    std::uniform_real_distribution<double> ul(0.1, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double al = 1.0 + 2.0 * ul(rng) / 5.0;
        const double x = ux(rng), l = ul(rng);
        const double lhs = boundary_psi(al, BoundaryPoint::from_affine(l * x)).affine();
        const double rhs = std::pow(l, al) * boundary_psi(al, BoundaryPoint::from_affine(x)).affine();
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * (1.0 + std::fabs(rhs)));
    }
}

TEST_CASE("boundary convergence of the interior map") {
    for (const double a : {0.5, 2.0, 8.0}) {
        const double alpha = std::sqrt(1.0 + a);
        for (const double t : {-1.0, -0.2, 0.4, 1.0}) {
            const UhpPoint z = fermi_to_uhp(apply_g_a(a, {20.0, t}));
            const double want =
                boundary_psi(alpha, BoundaryPoint::from_affine(std::exp(t))).affine();
            CHECK(std::fabs(z.x - want) < 1e-6 * (1.0 + std::fabs(want)));
            CHECK(z.y < 1e-6 * (1.0 + std::fabs(want)));
        }
    }
}

TEST_CASE("maximal dilatation of the power family") {
    CHECK(max_dilatation_power(0.0) == 1.0);
    CHECK(max_dilatation_power(3.0) == 4.0);
    // sup_s g^2 is attained at s = 0
    const double a = 5.0;
    CHECK(g_profile(a, 0.0) * g_profile(a, 0.0) ==
          doctest::Approx(max_dilatation_power(a)).epsilon(1e-14));
    CHECK(g_profile(a, 0.5) * g_profile(a, 0.5) < max_dilatation_power(a));
}

TEST_CASE("hessian construction") {
    const RadialFunction one{[](double) { return 1.0; }, [](double) { return 0.0; },
                             [](double) { return 0.0; }};
    const Mat2 h1 = hessian_radial(one, 0.7).m;
    CHECK(h1.a == -1.0);
    CHECK(h1.d == -1.0);

    const RadialFunction ch{[](double s) { return std::cosh(s); },
                            [](double s) { return std::sinh(s); },
                            [](double s) { return std::cosh(s); }};
    for (const double s : {-1.1, 0.3, 2.0}) {
        const Mat2 h = hessian_radial(ch, s).m;
        CHECK(std::fabs(h.a) < 1e-15);
        CHECK(h.d == doctest::Approx(-1.0 / std::cosh(s)).epsilon(1e-13));
    }

    // det(Hess r - r) = 1 reduces to the first-order ODE on g = r' tanh - r:
    // with r = cosh + the profile primitive this is indirect; check instead
    // that for g = g_a the reconstructed diagonal (g'/tanh + g, g) has unit
    // determinant, which is the same reduction read backwards.
    const double a = 3.0;
    const Profile g = analytic_profile(a);
    for (const double s : {-2.0, -0.4, 0.9, 3.0}) {
        const double det = (g.deriv(s) / std::tanh(s) + g.value(s)) * g.value(s);
        CHECK(det == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("power params from alpha stay accurate near 1") {
    const auto p = PowerParams::from_alpha(1.0 + 1e-9);
    CHECK(p.a() == doctest::Approx(2e-9).epsilon(1e-6));
    CHECK(PowerParams::from_a(3.0).alpha() == 2.0);
    CHECK_THROWS_AS(PowerParams::from_alpha(0.99), DomainError);
    CHECK_THROWS_AS(PowerParams::from_a(-0.2), DomainError);
}
