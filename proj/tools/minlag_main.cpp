// minlag: command-line front end for the minimal-Lagrangian extension
// families: parameter sweeps, cross-ratio norm estimation, verification
// suites, asymptotic limit reports and the extremal-gap comparison.
//
// Exit codes: 0 success, 1 failed verification or limit, 2 usage error.

#include "minlag/crnorm.hpp"
#include "minlag/earthquake.hpp"
#include "minlag/errors.hpp"
#include "minlag/experiments.hpp"
#include "minlag/power.hpp"
#include "minlag/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct RangeSpec {
    double lo = 0.0;
    double hi = 0.0;
    bool set = false;
};

// "lo:hi" (or a single value, meaning lo = hi)
bool parse_range(const std::string& text, RangeSpec& out) {
    const auto colon = text.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            out.lo = out.hi = std::stod(text, &used);
            if (used != text.size()) return false;
        } else {
            out.lo = std::stod(text.substr(0, colon), &used);
            if (used != colon) return false;
            const std::string rest = text.substr(colon + 1);
            out.hi = std::stod(rest, &used);
            if (used != rest.size()) return false;
        }
    } catch (const std::exception&) {
        return false;
    }
    out.set = true;
    return true;
}

std::vector<double> sample_range(const RangeSpec& r, int samples, const std::string& spacing) {
    std::vector<double> out;
    if (samples == 1 || r.lo == r.hi) {
        out.push_back(r.lo);
        return out;
    }
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / (samples - 1);
        if (spacing == "log") {
            out.push_back(std::exp(std::log(r.lo) + t * (std::log(r.hi) - std::log(r.lo))));
        } else {
            out.push_back(r.lo + t * (r.hi - r.lo));
        }
    }
    return out;
}

int write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "minlag: cannot open output file: " << path << "\n";
        return 1;
    }
    f << payload;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal Lagrangian extensions of the hyperbolic plane: "
                 "explicit families, dilatations and cross-ratio norms"};
    app.require_subcommand(1);

    std::string output;
    std::string format = "csv";
    int samples = 8;
    std::string spacing = "linear";
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "progress notes on standard error");

    // earthquake-curve ---------------------------------------------------
    auto* eq = app.add_subcommand("earthquake-curve",
                                  "Sweep the earthquake family: parameter, log K, "
                                  "cross-ratio norm and their ratio");
    RangeSpec eq_k, eq_eps;
    std::string eq_k_text, eq_eps_text;
    eq->add_option("--k", eq_k_text, "k range lo:hi, 0 <= k < 1");
    eq->add_option("--eps", eq_eps_text,
                   "eps = 1-k^2 range lo:hi (preferred near k = 1, where typing k "
                   "loses precision)");
    eq->add_option("--samples", samples, "number of grid points")->check(CLI::PositiveNumber);
    eq->add_option("--spacing", spacing, "linear|log")
        ->check(CLI::IsMember({"linear", "log"}));
    eq->add_option("--output,-o", output, "output path (default stdout)");
    eq->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // power-curve ---------------------------------------------------------
    auto* pw = app.add_subcommand("power-curve",
                                  "Sweep the power family: alpha, log K, norm lower "
                                  "bound and their ratio");
    std::string pw_alpha_text;
    bool pw_estimate = false;
    pw->add_option("--alpha", pw_alpha_text, "alpha range lo:hi, alpha >= 1")->required();
    pw->add_option("--samples", samples, "number of grid points")->check(CLI::PositiveNumber);
    pw->add_option("--spacing", spacing, "linear|log")
        ->check(CLI::IsMember({"linear", "log"}));
    pw->add_flag("--estimate", pw_estimate,
                 "also emit rows with the optimizer's norm estimate");
    pw->add_option("--output,-o", output, "output path (default stdout)");
    pw->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // norm ------------------------------------------------------------------
    auto* nm = app.add_subcommand("norm", "Estimate the cross-ratio norm of a boundary map");
    std::string nm_family;
    double nm_lambda = 1.0, nm_alpha = 2.0;
    int nm_starts = 64;
    double nm_stability = 1e-8;
    nm->add_option("--family", nm_family, "earthquake|power")
        ->required()
        ->check(CLI::IsMember({"earthquake", "power"}));
    nm->add_option("--lambda", nm_lambda, "earthquake weight (family earthquake)");
    nm->add_option("--alpha", nm_alpha, "power exponent (family power)");
    nm->add_option("--starts", nm_starts, "quasi-random optimizer starts")
        ->check(CLI::PositiveNumber);
    nm->add_option("--stability-tol", nm_stability,
                   "relative agreement of the top three starts declaring convergence")
        ->check(CLI::PositiveNumber);
    nm->add_option("--output,-o", output, "output path (default stdout)");
    nm->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // verify ------------------------------------------------------------
    auto* vf = app.add_subcommand("verify", "Run a named verification suite");
    std::string vf_suite;
    vf->add_option("--suite", vf_suite, "ode|codazzi|curvature|elliptic|pullback|dilatation")
        ->required()
        ->check(CLI::IsMember(minlag::suite_names()));

    // limits ------------------------------------------------------------
    auto* lm = app.add_subcommand("limits",
                                  "Evaluate the asymptotic ratio limits and corollary "
                                  "bands; exit 1 if any fails");
    lm->add_option("--output,-o", output, "output path (default stdout)");
    lm->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

    // strebel-gap ---------------------------------------------------------
    auto* sg = app.add_subcommand("strebel-gap",
                                  "Compare log K against the quadratic extremal scale "
                                  "2 log lambda for large weights");
    std::string sg_lambda_text;
    sg->add_option("--lambda", sg_lambda_text, "lambda range lo:hi, lambda >= 10")->required();
    sg->add_option("--samples", samples, "number of grid points")->check(CLI::PositiveNumber);
    sg->add_option("--spacing", spacing, "linear|log")
        ->check(CLI::IsMember({"linear", "log"}));
    sg->add_option("--output,-o", output, "output path (default stdout)");
    sg->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (eq->parsed()) {
            if (!eq_k_text.empty() && !eq_eps_text.empty()) {
                std::cerr << "minlag: give --k or --eps, not both\n";
                return 2;
            }
            minlag::ParamKind kind = minlag::ParamKind::k;
            RangeSpec range;
            if (!eq_eps_text.empty()) {
                kind = minlag::ParamKind::eps;
                if (!parse_range(eq_eps_text, range)) {
                    std::cerr << "minlag: bad --eps range\n";
                    return 2;
                }
            } else if (!eq_k_text.empty()) {
                if (!parse_range(eq_k_text, range)) {
                    std::cerr << "minlag: bad --k range\n";
                    return 2;
                }
            } else {
                std::cerr << "minlag: earthquake-curve needs --k or --eps\n";
                return 2;
            }
            const auto grid = sample_range(range, samples, spacing);
            if (verbose)
                std::cerr << "minlag: sweeping " << grid.size() << " earthquake parameters\n";
            const auto rows = minlag::ratio_curve_earthquake(grid, kind);
            return write_output(output,
                                format == "json" ? minlag::to_json(rows) : minlag::to_csv(rows));
        }

        if (pw->parsed()) {
            RangeSpec range;
            if (!parse_range(pw_alpha_text, range)) {
                std::cerr << "minlag: bad --alpha range\n";
                return 2;
            }
            const auto grid = sample_range(range, samples, spacing);
            if (verbose)
                std::cerr << "minlag: sweeping " << grid.size() << " exponents"
                          << (pw_estimate ? " with norm estimates" : "") << "\n";
            const auto rows = minlag::ratio_curve_power(grid, pw_estimate);
            return write_output(output,
                                format == "json" ? minlag::to_json(rows) : minlag::to_csv(rows));
        }

        if (nm->parsed()) {
            minlag::NormEstimatorConfig cfg;
            cfg.starts = nm_starts;
            cfg.stability_rel = nm_stability;
            if (verbose)
                std::cerr << "minlag: estimating with " << nm_starts
                          << " quasi-random starts plus the family seeds\n";
            minlag::BoundaryMap phi;
            double reference = 0.0;
            if (nm_family == "earthquake") {
                if (!(nm_lambda >= 0.0)) {
                    std::cerr << "minlag: need --lambda >= 0\n";
                    return 2;
                }
                phi = [l = nm_lambda](const minlag::BoundaryPoint& x) {
                    return minlag::boundary_phi(l, x);
                };
                reference = minlag::reference_norm_earthquake(nm_lambda);
            } else {
                if (!(nm_alpha > 0.0)) {
                    std::cerr << "minlag: need --alpha > 0\n";
                    return 2;
                }
                if (nm_alpha < 1.0) {
                    // the inverse family: same norm and dilatation as 1/alpha
                    std::cerr << "minlag: alpha < 1 is the inverse family; computing with alpha = "
                              << 1.0 / nm_alpha << "\n";
                    nm_alpha = 1.0 / nm_alpha;
                }
                phi = [a = nm_alpha](const minlag::BoundaryPoint& x) {
                    return minlag::boundary_psi(a, x);
                };
                reference = minlag::reference_lower_bound_power(nm_alpha);
            }
            const auto est = minlag::estimate_norm(phi, cfg);
            std::string payload;
            if (format == "json") {
                nlohmann::ordered_json j;
                j["family"] = nm_family;
                j["param"] = nm_family == "earthquake" ? nm_lambda : nm_alpha;
                j["value"] = est.value;
                j["reference"] = reference;
                if (est.argmax) {
                    auto arr = nlohmann::ordered_json::array();
                    for (int i = 0; i < 4; ++i) {
                        const double x = (*est.argmax)[i].affine();
                        // JSON has no infinity; keep the point readable
                        if (std::isinf(x))
                            arr.push_back(x > 0 ? "inf" : "-inf");
                        else
                            arr.push_back(x);
                    }
                    j["argmax"] = arr;
                }
                j["starts_used"] = est.starts_used;
                j["converged"] = est.converged;
                payload = j.dump(2) + "\n";
            } else {
                payload = "family:      " + nm_family + "\n";
                payload += "value:       " + minlag::format_double(est.value) + "\n";
                payload += "reference:   " + minlag::format_double(reference) +
                           (nm_family == "power" ? " (lower bound)\n" : " (exact)\n");
                if (est.argmax) {
                    payload += "argmax:     ";
                    for (int i = 0; i < 4; ++i)
                        payload += " " + minlag::format_double((*est.argmax)[i].affine());
                    payload += "\n";
                }
                payload += "starts_used: " + std::to_string(est.starts_used) + "\n";
                payload += std::string("converged:   ") + (est.converged ? "true" : "false") +
                           "\n";
            }
            return write_output(output, payload);
        }

        if (vf->parsed()) {
            const auto checks = minlag::run_suite(vf_suite);
            bool all = true;
            for (const auto& c : checks) {
                all = all && c.pass;
                std::printf("[%s] %s: observed %.6g %s bound %.6g\n", c.pass ? "ok" : "FAIL",
                            c.name.c_str(), c.observed, c.cmp.c_str(), c.bound);
            }
            return all ? 0 : 1;
        }

        if (lm->parsed()) {
            const auto rep = minlag::limit_report();
            const int rc = write_output(output, minlag::to_json(rep));
            if (rc != 0) return rc;
            return rep.all_pass ? 0 : 1;
        }

        if (sg->parsed()) {
            RangeSpec range;
            if (!parse_range(sg_lambda_text, range)) {
                std::cerr << "minlag: bad --lambda range\n";
                return 2;
            }
            const auto grid = sample_range(range, samples, spacing);
            if (verbose)
                std::cerr << "minlag: inverting " << grid.size()
                          << " weights by bisection in log eps\n";
            const auto rows = minlag::strebel_gap(grid);
            return write_output(output,
                                format == "json" ? minlag::to_json(rows) : minlag::to_csv(rows));
        }
    } catch (const minlag::DomainError& e) {
        std::cerr << "minlag: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "minlag: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
