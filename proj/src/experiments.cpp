#include "minlag/experiments.hpp"
#include "minlag/earthquake.hpp"
#include "minlag/errors.hpp"
#include "minlag/crnorm.hpp"
#include "minlag/parallel.hpp"
#include "minlag/power.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

namespace minlag {

std::string to_string(ParamKind k) {
    switch (k) {
        case ParamKind::k: return "k";
        case ParamKind::eps: return "eps";
        case ParamKind::alpha: return "alpha";
    }
    return "?";
}

std::string to_string(NormKind k) {
    switch (k) {
        case NormKind::exact: return "exact";
        case NormKind::lower_bound: return "lower_bound";
        case NormKind::estimated: return "estimated";
    }
    return "?";
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

EarthquakeParams make_params(ParamKind kind, double value) {
    return kind == ParamKind::eps ? EarthquakeParams::from_eps(value)
                                  : EarthquakeParams::from_k(value);
}

double log_dilatation_earthquake(const EarthquakeParams& p) {
    // log((1+k^2)/(1-k^2)) = log(2 - eps) - log(eps), no cancellation near k=1
    return std::log(2.0 - p.eps()) - std::log(p.eps());
}

RatioSample make_row(std::string family, ParamKind kind, double param, double log_K,
                     double cr_norm, NormKind norm_kind) {
    return {std::move(family), kind, param, log_K, cr_norm, norm_kind, log_K / cr_norm};
}

} // namespace

std::vector<RatioSample> ratio_curve_earthquake(const std::vector<double>& params,
                                                ParamKind kind) {
    if (kind == ParamKind::alpha)
        throw DomainError("ratio_curve_earthquake: parameters are k or eps");
    std::vector<EarthquakeParams> ps;
    ps.reserve(params.size());
    for (const double v : params) ps.push_back(make_params(kind, v)); // domain-checked here
    std::vector<RatioSample> rows(params.size());
    std::vector<char> keep(params.size(), 0);
    parallel_for(params.size(), [&](std::size_t i) {
        if (ps[i].k2() == 0.0) return; // identity member: ratio is 0/0
        rows[i] = make_row("earthquake", kind, params[i], log_dilatation_earthquake(ps[i]),
                           lambda_k(ps[i]), NormKind::exact);
        keep[i] = 1;
    });
    std::vector<RatioSample> out;
    out.reserve(params.size());
    for (std::size_t i = 0; i < params.size(); ++i)
        if (keep[i]) out.push_back(std::move(rows[i]));
    return out;
}

std::vector<RatioSample> ratio_curve_power(const std::vector<double>& alphas,
                                           bool with_estimate) {
    for (const double alpha : alphas)
        if (!(alpha >= 1.0)) throw DomainError("ratio_curve_power: need alpha >= 1");
    std::vector<std::vector<RatioSample>> rows(alphas.size());
    parallel_for(alphas.size(), [&](std::size_t i) {
        const double alpha = alphas[i];
        if (alpha == 1.0) return; // identity member
        const double log_K = 2.0 * std::log(alpha);
        rows[i].push_back(make_row("power", ParamKind::alpha, alpha, log_K,
                                   reference_lower_bound_power(alpha), NormKind::lower_bound));
        if (with_estimate) {
            const auto est = estimate_norm(
                [alpha](const BoundaryPoint& x) { return boundary_psi(alpha, x); });
            rows[i].push_back(
                make_row("power", ParamKind::alpha, alpha, log_K, est.value, NormKind::estimated));
        }
    });
    std::vector<RatioSample> out;
    for (auto& r : rows)
        for (auto& s : r) out.push_back(std::move(s));
    return out;
}

namespace {

LimitCheck make_limit(std::string name, double target, double tolerance,
                      std::vector<RatioSample> samples) {
    LimitCheck c{std::move(name), target, tolerance, std::move(samples), 0.0, false};
    bool decreasing = true;
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& s : c.samples) {
        const double err = std::fabs(s.ratio - target);
        if (err > prev + 1e-14) decreasing = false;
        prev = err;
    }
    c.final_error = c.samples.empty() ? std::numeric_limits<double>::quiet_NaN() : prev;
    c.pass = !c.samples.empty() && decreasing && c.final_error <= tolerance;
    return c;
}

} // namespace

LimitReport limit_report() {
    LimitReport rep;
    const double two_over_pi = 2.0 / std::numbers::pi;
    const double half_sqrt2 = std::sqrt(2.0) / 2.0;
    // slope of the refined lower bound at alpha = 1 is 2 sqrt2 log(1+sqrt2)
    const double power_limit = 2.0 / (2.0 * std::sqrt(2.0) * std::log1p(std::sqrt(2.0)));

    rep.limits.push_back(make_limit(
        "earthquake_small_weight", two_over_pi, 1e-3,
        ratio_curve_earthquake({0.1, 0.05, 0.02, 0.01}, ParamKind::k)));
    rep.limits.push_back(make_limit(
        "earthquake_large_weight", half_sqrt2, 1e-2,
        ratio_curve_earthquake({1e-4, 1e-6, 1e-8, 1e-10}, ParamKind::eps)));
    rep.limits.push_back(make_limit("power_near_identity", power_limit, 1e-2,
                                    ratio_curve_power({1.1, 1.01, 1.001})));
    rep.limits.push_back(make_limit("power_large_exponent", 0.0, 0.02,
                                    ratio_curve_power({1e1, 1e2, 1e3, 1e4})));

    // Corollary bands: small-weight ratios inside [1/2, 2/pi] (widened by the
    // stated tolerances), large-weight ratio at least sqrt2/2 - 1e-2.
    {
        const auto rows =
            ratio_curve_earthquake({0.05, 0.1, 0.15, 0.178}, ParamKind::k);
        const double lo = 0.5 - 1e-3;
        const double hi = two_over_pi + 1e-3;
        CorollaryCheck c{"small_weight_ratio_band", lo, hi,
                         std::numeric_limits<double>::quiet_NaN(), true};
        for (const auto& r : rows) {
            if (r.cr_norm > 0.1) continue; // band applies to lambda_k <= 0.1
            // record the sample closest to leaving the band
            if (std::isnan(c.observed) ||
                std::fabs(r.ratio - 0.5 * (lo + hi)) > std::fabs(c.observed - 0.5 * (lo + hi)))
                c.observed = r.ratio;
            if (!(r.ratio >= lo && r.ratio <= hi)) c.pass = false;
        }
        rep.corollaries.push_back(c);
    }
    {
        const auto rows = ratio_curve_earthquake({1e-10}, ParamKind::eps);
        const double lo = half_sqrt2 - 1e-2;
        CorollaryCheck c{"large_weight_ratio_floor", lo,
                         std::numeric_limits<double>::infinity(), rows[0].ratio,
                         rows[0].ratio >= lo};
        rep.corollaries.push_back(c);
    }

    rep.all_pass = true;
    for (const auto& l : rep.limits) rep.all_pass = rep.all_pass && l.pass;
    for (const auto& c : rep.corollaries) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

std::vector<StrebelRow> strebel_gap(const std::vector<double>& lambdas) {
    const auto weight = [](double log_eps) {
        return lambda_k(EarthquakeParams::from_eps(std::exp(log_eps)));
    };
    const double w_lo = weight(-40.0);
    const double w_hi = weight(-1.0);
    for (const double lam : lambdas) {
        if (!(lam >= 10.0)) throw DomainError("strebel_gap: need lambda >= 10");
        if (!(w_lo >= lam && w_hi <= lam))
            throw BisectionFailure("strebel_gap: lambda not bracketed by eps in [e^-40, e^-1]");
    }
    std::vector<StrebelRow> rows(lambdas.size());
    parallel_for(lambdas.size(), [&](std::size_t i) {
        const double lam = lambdas[i];
        double lo = -40.0, hi = -1.0; // bisection on log eps; lambda_k decreases in eps
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (weight(mid) >= lam ? lo : hi) = mid;
            if (hi - lo < 1e-12) break;
        }
        const auto p = EarthquakeParams::from_eps(std::exp(0.5 * (lo + hi)));
        const double logK = log_dilatation_earthquake(p);
        const double scale = 2.0 * std::log(lam);
        rows[i] = {lam, logK, scale, logK - scale};
    });
    return rows;
}

namespace {

void append_csv(std::string& out, const RatioSample& r) {
    out += r.family;
    out += ',';
    out += to_string(r.param_kind);
    out += ',';
    out += format_double(r.param);
    out += ',';
    out += format_double(r.log_K);
    out += ',';
    out += format_double(r.cr_norm);
    out += ',';
    out += to_string(r.cr_norm_kind);
    out += ',';
    out += format_double(r.ratio);
    out += '\n';
}

nlohmann::ordered_json sample_json(const RatioSample& r) {
    return {{"family", r.family},
            {"param_kind", to_string(r.param_kind)},
            {"param", r.param},
            {"log_K", r.log_K},
            {"cr_norm", r.cr_norm},
            {"cr_norm_kind", to_string(r.cr_norm_kind)},
            {"ratio", r.ratio}};
}

} // namespace

std::string to_csv(const std::vector<RatioSample>& rows) {
    std::string out = "family,param_kind,param,log_K,cr_norm,cr_norm_kind,ratio\n";
    for (const auto& r : rows) append_csv(out, r);
    return out;
}

std::string to_csv(const std::vector<StrebelRow>& rows) {
    std::string out = "lambda,log_K_minlag,log_K_extremal_scale,gap\n";
    for (const auto& r : rows) {
        out += format_double(r.lambda);
        out += ',';
        out += format_double(r.log_K_minlag);
        out += ',';
        out += format_double(r.log_K_extremal_scale);
        out += ',';
        out += format_double(r.gap);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<RatioSample>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(sample_json(r));
    return arr.dump(2) + "\n";
}

std::string to_json(const LimitReport& report) {
    nlohmann::ordered_json j;
    j["limits"] = nlohmann::ordered_json::array();
    for (const auto& l : report.limits) {
        nlohmann::ordered_json lj;
        lj["name"] = l.name;
        lj["target"] = l.target;
        lj["tolerance"] = l.tolerance;
        lj["samples"] = nlohmann::ordered_json::array();
        for (const auto& s : l.samples) lj["samples"].push_back(sample_json(s));
        lj["final_error"] = l.final_error;
        lj["pass"] = l.pass;
        j["limits"].push_back(lj);
    }
    j["corollaries"] = nlohmann::ordered_json::array();
    for (const auto& c : report.corollaries) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        if (std::isfinite(c.lower)) cj["lower"] = c.lower;
        if (std::isfinite(c.upper)) cj["upper"] = c.upper;
        cj["observed"] = c.observed;
        cj["pass"] = c.pass;
        j["corollaries"].push_back(cj);
    }
    j["all_pass"] = report.all_pass;
    return j.dump(2) + "\n";
}

std::string to_json(const std::vector<StrebelRow>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows)
        arr.push_back(nlohmann::ordered_json{{"lambda", r.lambda},
                                             {"log_K_minlag", r.log_K_minlag},
                                             {"log_K_extremal_scale", r.log_K_extremal_scale},
                                             {"gap", r.gap}});
    return arr.dump(2) + "\n";
}

} // namespace minlag
