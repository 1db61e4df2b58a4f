#include "minlag/earthquake.hpp"
#include "minlag/elliptic.hpp"
#include "minlag/errors.hpp"
#include "minlag/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace minlag;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;

double simpson_lambda(const EarthquakeParams& p, int n) {
    const double h = std::numbers::pi / n;
    double acc = h_prime(p, -kHalfPi) + h_prime(p, kHalfPi);
    for (int i = 1; i < n; ++i) acc += h_prime(p, -kHalfPi + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}
} // namespace

TEST_CASE("h_prime closed-form values") {
    const auto p = EarthquakeParams::from_k(0.7);
    const double k2 = 0.49;
    CHECK(h_prime(p, 0.0) ==
          doctest::Approx(2.0 * k2 / std::sqrt(1.0 - k2 * k2)).epsilon(1e-14));
    CHECK(h_prime(EarthquakeParams::from_k(0.0), 0.3) == 0.0);
    CHECK(h_prime(p, kHalfPi) < 1e-30);
    CHECK(h_prime(p, -kHalfPi) < 1e-30);
    CHECK_THROWS_AS(h_prime(p, 2.0), DomainError);
    CHECK_THROWS_AS(EarthquakeParams::from_k(1.0), DomainError);
}

TEST_CASE("h_second matches central differences of h_prime") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> uk(0.05, 0.99);
    std::uniform_real_distribution<double> uu(-0.95, 0.95);
    const double d = 1e-5;
    for (int i = 0; i < 100; ++i) {
        const auto p = EarthquakeParams::from_k(uk(rng));
        const double u = kHalfPi * uu(rng);
        const double fd = (h_prime(p, u + d) - h_prime(p, u - d)) / (2 * d);
        CHECK(std::fabs(h_second(p, u) - fd) < 1e-6 * (1.0 + std::fabs(fd)));
    }
}

TEST_CASE("h vanishes identically at k = 0") {
    const auto p = EarthquakeParams::from_k(0.0);
    CHECK(h_value(p, 0.3) == 0.0);
    CHECK(lambda_k(p) == 0.0);
    const BandPoint q = apply_f_k(p, {0.4, -1.0});
    CHECK(q.u == 0.4);
    CHECK(q.v == -1.0);
}

TEST_CASE("lambda sandwich between F(k)/sqrt(1+k^2) and F(k)") {
    for (const double k : {0.05, 0.2, 0.5, 0.8, 0.95}) {
        const auto p = EarthquakeParams::from_k(k);
        const double F = 4.0 * (elliptic_K(k) - elliptic_E(k));
        const double lam = lambda_k(p);
        CHECK(lam >= F / std::sqrt(1.0 + k * k) - 1e-12);
        CHECK(lam <= F + 1e-12);
    }
    // and via the eps entry point at extreme parameters
    for (const double eps : {1e-4, 1e-8, 1e-10}) {
        const auto p = EarthquakeParams::from_eps(eps);
        const double F =
            4.0 * (elliptic_K_from_eps(eps) - elliptic_E_from_eps(eps));
        const double lam = lambda_k(p);
        CHECK(lam >= F / std::sqrt(2.0 - eps) - 1e-9);
        CHECK(lam <= F * (1.0 + 1e-12));
    }
}

TEST_CASE("lambda against a 1e6-point Simpson oracle at k^2 = 1/2") {
    const auto p = EarthquakeParams::from_k(std::sqrt(0.5));
    const double oracle = simpson_lambda(p, 1000000);
    CHECK(std::fabs(lambda_k(p) - oracle) < 1e-8);
}

TEST_CASE("lambda is strictly increasing and blows up toward k = 1") {
    double prev = 0.0;
    for (double k = 0.05; k <= 0.951; k += 0.05) {
        const double lam = lambda_k(EarthquakeParams::from_k(k));
        CHECK(lam > prev);
        prev = lam;
    }
    CHECK(lambda_k(EarthquakeParams::from_eps(1e-8)) >
          lambda_k(EarthquakeParams::from_eps(1e-4)));
}

TEST_CASE("apply_f_k: translation equivariance and map structure") {
    const auto p = EarthquakeParams::from_k(0.6);
    const EarthquakeMap f(p);
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> uu(-1.5, 1.5);
    std::uniform_real_distribution<double> uv(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double u = uu(rng), v = uv(rng), d = uv(rng);
        const BandPoint a = f({u, v + d});
        const BandPoint b = f({u, v});
        CHECK(a.u == b.u);
        CHECK(a.v - b.v == doctest::Approx(d).epsilon(1e-12));
        // cached profile agrees with the direct integral
        CHECK(f.h(u) == doctest::Approx(h_value(p, u)).epsilon(1e-11));
    }
    // h(pi/2) is the weight
    CHECK(f.h(kHalfPi) == doctest::Approx(lambda_k(p)).epsilon(1e-12));

    // boundary extension: side - fixes v, side + adds the weight
    const BandPoint minus = apply_f_k(p, {-kHalfPi, 0.7});
    CHECK(minus.v == doctest::Approx(0.7).epsilon(1e-14));
    const BandPoint plus = apply_f_k(p, {kHalfPi, 0.7});
    CHECK(plus.v - 0.7 == doctest::Approx(lambda_k(p)).epsilon(1e-12));
}

TEST_CASE("cached profile handles near-degenerate parameters") {
    const auto p = EarthquakeParams::from_eps(1e-8);
    const EarthquakeMap f(p);
    const double lam = lambda_k(p);
    CHECK(f.h(kHalfPi) == doctest::Approx(lam).epsilon(1e-10));
    CHECK(f.h(0.0) == doctest::Approx(0.5 * lam).epsilon(1e-10)); // odd symmetry of h - lam/2
    const double probe = 2e-5; // inside the integrand peak
    CHECK(f.h(probe) == doctest::Approx(h_value(p, probe)).epsilon(1e-10));
}

TEST_CASE("boundary earthquake map") {
    CHECK(boundary_phi(2.0, BoundaryPoint::from_affine(-2.0)).affine() == -2.0);
    CHECK(boundary_phi(1.0, BoundaryPoint::from_affine(1.0)).affine() ==
          doctest::Approx(std::numbers::e).epsilon(1e-15));
    CHECK(boundary_phi(3.0, BoundaryPoint::infinity()).is_infinite());
    CHECK(boundary_phi(3.0, BoundaryPoint::from_affine(0.0)).affine() == 0.0);
    for (double x = -2.0; x <= 2.01; x += 0.2)
        CHECK(boundary_phi(0.0, BoundaryPoint::from_affine(x)).affine() ==
              doctest::Approx(x).epsilon(1e-15));
    CHECK_THROWS_AS(boundary_phi(-1.0, BoundaryPoint::from_affine(1.0)), DomainError);
}

TEST_CASE("b tensor: identity at k = 0, det 1, trace identity") {
    const Mat2 id = b_tensor_earthquake(EarthquakeParams::from_k(0.0), 0.4).m;
    CHECK(id.a == doctest::Approx(1.0));
    CHECK(id.d == doctest::Approx(1.0));
    CHECK(id.b == doctest::Approx(0.0));

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> uk(0.05, 0.99);
    std::uniform_real_distribution<double> uu(-0.98, 0.98);
    for (int i = 0; i < 100; ++i) {
        const auto p = EarthquakeParams::from_k(uk(rng));
        const double u = kHalfPi * uu(rng);
        const Tensor2 bt = b_tensor_earthquake(p, u);
        const Mat2& b = bt.m;
        CHECK(std::fabs(b.det() - 1.0) < 1e-12);
        const double hp = h_prime(p, u);
        CHECK(std::fabs(b.trace() - std::sqrt(4.0 + hp * hp)) < 1e-12);
    }
}

TEST_CASE("closed-form Codazzi residual") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> uk(0.05, 0.99);
    std::uniform_real_distribution<double> uu(-0.98, 0.98);
    for (int i = 0; i < 100; ++i) {
        const auto p = EarthquakeParams::from_k(uk(rng));
        const double u = kHalfPi * uu(rng);
        CHECK(std::fabs(codazzi_residual_closed(h_prime(p, u), h_second(p, u), u)) < 1e-9);
    }
    // substitution h(u) = u gives tan(u) on the nose
    CHECK(codazzi_residual_closed(1.0, 0.0, std::numbers::pi / 4.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(codazzi_residual_closed(0.0, 1.0, 0.3), DivisionByZero);
}

TEST_CASE("maximal dilatation closed form") {
    CHECK(max_dilatation_earthquake(EarthquakeParams::from_k(0.0)) == 1.0);
    CHECK(max_dilatation_earthquake(EarthquakeParams::from_k(std::sqrt(1.0 / 3.0))) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // eta_+(0)^2 equals the closed form; eta_+ decreases away from u = 0
    const auto p = EarthquakeParams::from_k(0.77);
    const auto eta = [&](double u) {
        const double hp = h_prime(p, u);
        return 0.5 * (std::sqrt(4.0 + hp * hp) + hp);
    };
    CHECK(eta(0.0) * eta(0.0) ==
          doctest::Approx(max_dilatation_earthquake(p)).epsilon(1e-12));
    CHECK(eta(0.0) > eta(0.4));
    CHECK(eta(0.0) > eta(-1.2));
}

TEST_CASE("boundary coherence through the band chart") {
    const auto p = EarthquakeParams::from_k(0.65);
    const EarthquakeMap f(p);
    const double lam = lambda_k(p);
    const double u_edge = kHalfPi - 1e-4;
    for (int i = 0; i < 20; ++i) {
        const double v = -2.0 + 4.0 * i / 19.0;
        // positive side: x = e^v scaled by e^lambda
        const BandPoint fp = f({u_edge, v});
        const double img = band_to_uhp(fp).x;
        const double want =
            boundary_phi(lam, band_boundary_to_rp1(BandSide::plus, v)).affine();
        CHECK(std::fabs(img - want) < 1e-6 * (1.0 + std::fabs(want)));
        // negative side: fixed
        const BandPoint fm = f({-u_edge, v});
        const double img_m = band_to_uhp(fm).x;
        const double want_m = band_boundary_to_rp1(BandSide::minus, v).affine();
        CHECK(std::fabs(img_m - want_m) < 1e-6 * (1.0 + std::fabs(want_m)));
    }
}
