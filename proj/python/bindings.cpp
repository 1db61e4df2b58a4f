#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minlag/crnorm.hpp"
#include "minlag/errors.hpp"
#include "minlag/earthquake.hpp"
#include "minlag/elliptic.hpp"
#include "minlag/experiments.hpp"
#include "minlag/geometry.hpp"
#include "minlag/power.hpp"
#include "minlag/qc.hpp"

#include <cmath>

namespace py = pybind11;
using namespace minlag;

namespace {

BoundaryPoint from_float(double x) {
    if (std::isinf(x)) return BoundaryPoint::infinity();
    return BoundaryPoint::from_affine(x);
}

EarthquakeParams params_from(double k, py::object eps) {
    if (!eps.is_none()) return EarthquakeParams::from_eps(eps.cast<double>());
    return EarthquakeParams::from_k(k);
}

py::dict estimate_to_dict(const NormEstimate& est) {
    py::dict d;
    d["value"] = est.value;
    d["starts_used"] = est.starts_used;
    d["converged"] = est.converged;
    if (est.argmax) {
        py::list q;
        for (int i = 0; i < 4; ++i) q.append((*est.argmax)[i].affine());
        d["argmax"] = q;
    }
    return d;
}

py::list rows_to_list(const std::vector<RatioSample>& rows) {
    py::list out;
    for (const auto& r : rows) {
        py::dict d;
        d["family"] = r.family;
        d["param_kind"] = to_string(r.param_kind);
        d["param"] = r.param;
        d["log_K"] = r.log_K;
        d["cr_norm"] = r.cr_norm;
        d["cr_norm_kind"] = to_string(r.cr_norm_kind);
        d["ratio"] = r.ratio;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_minlag, m) {
    m.doc() = "Minimal Lagrangian extensions of the hyperbolic plane: explicit "
              "families, dilatations and cross-ratio norms";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DegenerateQuadruple>(m, "DegenerateQuadruple", PyExc_ValueError);
    py::register_exception<NoConvergence>(m, "NoConvergence", PyExc_RuntimeError);
    py::register_exception<NonPositiveMetric>(m, "NonPositiveMetric", PyExc_ValueError);
    py::register_exception<BisectionFailure>(m, "BisectionFailure", PyExc_RuntimeError);

    // boundary arithmetic
    m.def(
        "cross_ratio",
        [](double x1, double x2, double x3, double x4) {
            return cross_ratio(
                Quadruple(from_float(x1), from_float(x2), from_float(x3), from_float(x4)));
        },
        py::arg("x1"), py::arg("x2"), py::arg("x3"), py::arg("x4"),
        "Cross-ratio of a positively ordered quadruple (use math.inf for the "
        "point at infinity)");
    m.def(
        "complete_symmetric",
        [](double x1, double x2, double x3) {
            return complete_symmetric(from_float(x1), from_float(x2), from_float(x3)).affine();
        },
        py::arg("x1"), py::arg("x2"), py::arg("x3"),
        "The unique fourth point making the quadruple symmetric (cr = -1)");

    // elliptic integrals
    m.def("elliptic_K", &elliptic_K, py::arg("k"));
    m.def("elliptic_K_from_eps", &elliptic_K_from_eps, py::arg("eps"));
    m.def("elliptic_E", &elliptic_E, py::arg("k"));
    m.def("elliptic_E_from_eps", &elliptic_E_from_eps, py::arg("eps"));

    // earthquake family
    m.def(
        "h_prime", [](double k, double u) { return h_prime(EarthquakeParams::from_k(k), u); },
        py::arg("k"), py::arg("u"));
    m.def(
        "h_value", [](double k, double u) { return h_value(EarthquakeParams::from_k(k), u); },
        py::arg("k"), py::arg("u"));
    m.def(
        "lambda_k", [](double k, py::object eps) { return lambda_k(params_from(k, eps)); },
        py::arg("k") = 0.0, py::arg("eps") = py::none(),
        "Earthquake weight; pass eps = 1-k^2 instead of k near k = 1");
    m.def(
        "max_dilatation_earthquake",
        [](double k, py::object eps) { return max_dilatation_earthquake(params_from(k, eps)); },
        py::arg("k") = 0.0, py::arg("eps") = py::none());
    m.def(
        "apply_f_k",
        [](double k, double u, double v) {
            const BandPoint q = apply_f_k(EarthquakeParams::from_k(k), {u, v});
            return py::make_tuple(q.u, q.v);
        },
        py::arg("k"), py::arg("u"), py::arg("v"));
    m.def(
        "boundary_phi",
        [](double lam, double x) { return boundary_phi(lam, from_float(x)).affine(); },
        py::arg("lam"), py::arg("x"));

    // power family
    m.def("g_profile", &g_profile, py::arg("a"), py::arg("s"));
    m.def("max_dilatation_power", &max_dilatation_power, py::arg("a"));
    m.def(
        "apply_g_a",
        [](double a, double s, double t) {
            const FermiPoint q = apply_g_a(a, {s, t});
            return py::make_tuple(q.s, q.t);
        },
        py::arg("a"), py::arg("s"), py::arg("t"));
    m.def(
        "boundary_psi",
        [](double alpha, double x) { return boundary_psi(alpha, from_float(x)).affine(); },
        py::arg("alpha"), py::arg("x"));

    // cross-ratio norm
    m.def("reference_norm_earthquake", &reference_norm_earthquake, py::arg("lam"));
    m.def("reference_lower_bound_power", &reference_lower_bound_power, py::arg("alpha"));
    m.def(
        "estimate_norm_earthquake",
        [](double lam, int starts) {
            NormEstimatorConfig cfg;
            cfg.starts = starts;
            return estimate_to_dict(estimate_norm(
                [lam](const BoundaryPoint& x) { return boundary_phi(lam, x); }, cfg));
        },
        py::arg("lam"), py::arg("starts") = 64);
    m.def(
        "estimate_norm_power",
        [](double alpha, int starts) {
            NormEstimatorConfig cfg;
            cfg.starts = starts;
            return estimate_to_dict(estimate_norm(
                [alpha](const BoundaryPoint& x) { return boundary_psi(alpha, x); }, cfg));
        },
        py::arg("alpha"), py::arg("starts") = 64);

    // experiments
    m.def(
        "earthquake_curve",
        [](const std::vector<double>& params, const std::string& kind) {
            return rows_to_list(ratio_curve_earthquake(
                params, kind == "eps" ? ParamKind::eps : ParamKind::k));
        },
        py::arg("params"), py::arg("kind") = "k");
    m.def(
        "power_curve",
        [](const std::vector<double>& alphas, bool with_estimate) {
            return rows_to_list(ratio_curve_power(alphas, with_estimate));
        },
        py::arg("alphas"), py::arg("with_estimate") = false);
    m.def("limit_report_json", []() { return to_json(limit_report()); },
          "The limit report as a JSON string");
    m.def(
        "strebel_gap",
        [](const std::vector<double>& lambdas) {
            py::list out;
            for (const auto& r : strebel_gap(lambdas)) {
                py::dict d;
                d["lambda"] = r.lambda;
                d["log_K_minlag"] = r.log_K_minlag;
                d["log_K_extremal_scale"] = r.log_K_extremal_scale;
                d["gap"] = r.gap;
                out.append(d);
            }
            return out;
        },
        py::arg("lambdas"));
}
