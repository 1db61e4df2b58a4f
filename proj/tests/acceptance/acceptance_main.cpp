// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass. Criterion 12 (byte-identical CLI reruns) needs the path of the
// minlag binary as argv[1].

#include "minlag/crnorm.hpp"
#include "minlag/earthquake.hpp"
#include "minlag/experiments.hpp"
#include "minlag/power.hpp"
#include "minlag/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

bool suite_passes(const std::vector<minlag::CheckResult>& checks, std::string& detail) {
    bool all = true;
    for (const auto& c : checks) {
        if (!c.pass) {
            all = false;
            detail += (detail.empty() ? "" : "; ") + c.name + ": observed " + fmt(c.observed) +
                      " " + c.cmp + " bound " + fmt(c.bound) + " violated";
        }
    }
    if (all) detail = "all " + std::to_string(checks.size()) + " checks hold";
    return all;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    using minlag::ParamKind;
    const double two_over_pi = 2.0 / std::numbers::pi;
    const double half_sqrt2 = std::sqrt(2.0) / 2.0;

    { // 1: earthquake ratio at k = 1e-2 against 2/pi, under one second
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows = minlag::ratio_curve_earthquake({0.01}, ParamKind::k);
        const double dt = seconds_since(t0);
        const double err = std::fabs(rows[0].ratio - two_over_pi);
        report(1, "small-weight earthquake ratio -> 2/pi", err <= 1e-3 && dt < 1.0,
               "|ratio - 2/pi| = " + fmt(err) + " <= 1e-3, runtime " + fmt(dt) + "s");
    }

    { // 2: eps sweep toward sqrt2/2, errors weakly decreasing, under 10 s
        const auto t0 = std::chrono::steady_clock::now();
        const auto rows =
            minlag::ratio_curve_earthquake({1e-4, 1e-6, 1e-8, 1e-10}, ParamKind::eps);
        const double dt = seconds_since(t0);
        bool decreasing = true;
        double prev = std::numeric_limits<double>::infinity();
        for (const auto& r : rows) {
            const double err = std::fabs(r.ratio - half_sqrt2);
            if (err > prev + 1e-14) decreasing = false;
            prev = err;
        }
        report(2, "large-weight earthquake ratio -> sqrt2/2",
               decreasing && prev <= 1e-2 && dt < 10.0,
               "final |ratio - sqrt2/2| = " + fmt(prev) + " <= 1e-2, weakly decreasing, runtime " +
                   fmt(dt) + "s");
    }

    { // 3: power ratio at alpha = 1.001 against the proof-derived 0.80228
        const auto t0 = std::chrono::steady_clock::now();
        const double alpha = 1.001;
        const double ratio =
            2.0 * std::log(alpha) / minlag::reference_lower_bound_power(alpha);
        const double dt = seconds_since(t0);
        const double err = std::fabs(ratio - 0.80228);
        report(3, "near-identity power ratio -> 0.80228", err <= 1e-2 && dt < 1.0,
               "|ratio - 0.80228| = " + fmt(err) + " <= 1e-2, runtime " + fmt(dt) + "s");
    }

    { // 4: power ratio vanishes at large alpha, monotonically
        const auto rows = minlag::ratio_curve_power({1e1, 1e2, 1e3, 1e4});
        bool monotone = true;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (!(rows[i].ratio < rows[i - 1].ratio)) monotone = false;
        const double at1e3 = rows[2].ratio;
        report(4, "large-exponent power ratio -> 0", monotone && at1e3 <= 0.02,
               "ratio(1e3) = " + fmt(at1e3) + " <= 0.02, decreasing over {1e1..1e4}");
    }

    { // 5: corollary bands
        const auto rows =
            minlag::ratio_curve_earthquake({0.05, 0.1, 0.15, 0.178}, ParamKind::k);
        bool band = true;
        for (const auto& r : rows) {
            if (r.cr_norm > 0.1) continue;
            if (!(r.ratio >= 0.5 - 1e-3 && r.ratio <= two_over_pi + 1e-3)) band = false;
        }
        const auto big = minlag::ratio_curve_earthquake({1e-10}, ParamKind::eps);
        const bool floor_ok = big[0].ratio >= half_sqrt2 - 1e-2;
        report(5, "corollary bands on the earthquake ratio", band && floor_ok,
               "small-weight ratios in [0.499, " + fmt(two_over_pi + 1e-3) +
                   "], large-weight ratio " + fmt(big[0].ratio) + " >= " +
                   fmt(half_sqrt2 - 1e-2));
    }

    { // 6: gap to the extremal growth scale is positive and increasing
        const auto rows = minlag::strebel_gap({10.0, 20.0, 40.0});
        const bool ok = rows[0].gap > 0.0 && rows[1].gap > rows[0].gap &&
                        rows[2].gap > rows[1].gap;
        report(6, "extremal gap positive and increasing", ok,
               "gaps " + fmt(rows[0].gap) + ", " + fmt(rows[1].gap) + ", " + fmt(rows[2].gap));
    }

    { // 7: closed-form ODE residual suites
        std::string detail;
        const bool ok = suite_passes(minlag::verify_ode(), detail);
        report(7, "closed-form ODE residuals <= 1e-9", ok, detail);
    }

    { // 8: oracle equivalences (dilatation, pullback, Codazzi decay order)
        std::string detail;
        bool ok = suite_passes(minlag::verify_dilatation(), detail);
        std::string d2;
        ok = suite_passes(minlag::verify_pullback(), d2) && ok;
        detail += "; " + d2;
        std::string d3;
        ok = suite_passes(minlag::verify_codazzi(), d3) && ok;
        detail += "; " + d3;
        report(8, "numeric oracles match the closed forms", ok, detail);
    }

    { // 9: curvature of the power-family domain metric
        std::string detail;
        const bool ok = suite_passes(minlag::verify_curvature(), detail);
        report(9, "domain-metric curvature = -1 +- 1e-4", ok, detail);
    }

    { // 10: cross-ratio norm estimates
        const auto eq = minlag::estimate_norm(
            [](const minlag::BoundaryPoint& x) { return minlag::boundary_phi(1.0, x); });
        const bool eq_ok = std::fabs(eq.value - 1.0) <= 1e-4;

        const minlag::Mobius m(1.4, 0.3, 0.5, 1.1);
        const auto mob = minlag::estimate_norm(
            [&m](const minlag::BoundaryPoint& x) { return minlag::apply_mobius(m, x); });
        const bool mob_ok = mob.value <= 1e-6;

        bool pow_ok = true;
        std::string pow_detail;
        for (const double alpha : {1.5, 2.0, 3.0}) {
            const auto est = minlag::estimate_norm([alpha](const minlag::BoundaryPoint& x) {
                return minlag::boundary_psi(alpha, x);
            });
            const double ref = minlag::reference_lower_bound_power(alpha);
            if (!(est.value >= ref - 1e-9)) pow_ok = false;
            pow_detail += " " + fmt(est.value) + ">=" + fmt(ref);
        }
        report(10, "norm estimator against the references", eq_ok && mob_ok && pow_ok,
               "phi_1: " + fmt(eq.value) + " = 1 +- 1e-4; moebius: " + fmt(mob.value) +
                   " <= 1e-6; psi_alpha:" + pow_detail);
    }

    { // 11: elliptic integral checks
        std::string detail;
        const bool ok = suite_passes(minlag::verify_elliptic(), detail);
        report(11, "elliptic integral module", ok, detail);
    }

    { // 12: byte-identical limits reruns through the CLI
        if (argc < 2) {
            report(12, "deterministic `minlag limits` output", false,
                   "path to the minlag binary not supplied");
        } else {
            const std::string bin = argv[1];
            const std::string out1 = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                     "/minlag_limits_1.json";
            const std::string out2 = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                     "/minlag_limits_2.json";
            const std::string cmd1 = bin + " limits --format json -o " + out1;
            const std::string cmd2 = bin + " limits --format json -o " + out2;
            const int rc1 = std::system(cmd1.c_str());
            const int rc2 = std::system(cmd2.c_str());
            const std::string a = read_file(out1);
            const std::string b = read_file(out2);
            const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
            report(12, "deterministic `minlag limits` output", ok,
                   "two runs, " + std::to_string(a.size()) + " bytes, exit codes " +
                       std::to_string(rc1) + "/" + std::to_string(rc2) +
                       (a == b ? ", identical" : ", DIFFER"));
        }
    }

    if (g_failures == 0) {
        std::printf("acceptance: all criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
