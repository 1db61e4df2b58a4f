#pragma once

#include <string>
#include <vector>

namespace minlag {

enum class ParamKind { k, eps, alpha };
enum class NormKind { exact, lower_bound, estimated };

std::string to_string(ParamKind k);
std::string to_string(NormKind k);

/// One row of a (parameter, log K, cross-ratio norm, ratio) sweep.
/// cr_norm_kind records whether the norm column is exact, a closed-form
/// lower bound (making the ratio an upper bound), or an optimizer estimate.
struct RatioSample {
    std::string family;
    ParamKind param_kind;
    double param;
    double log_K;
    double cr_norm;
    NormKind cr_norm_kind;
    double ratio; // log_K / cr_norm
};

/// Earthquake sweep: log K from the closed form, cr_norm = lambda_k (exact).
/// Parameters are k values or eps = 1 - k^2 values depending on kind.
/// k = 0 (eps = 1) rows are skipped: the ratio is 0/0 there.
std::vector<RatioSample> ratio_curve_earthquake(const std::vector<double>& params,
                                                ParamKind kind);

/// Power sweep over alpha > 1: log K = 2 log alpha, cr_norm the closed-form
/// lower bound. with_estimate appends, per alpha, a second row carrying the
/// optimizer estimate of the norm. alpha = 1 rows are skipped.
std::vector<RatioSample> ratio_curve_power(const std::vector<double>& alphas,
                                           bool with_estimate = false);

struct LimitCheck {
    std::string name;
    double target;
    double tolerance;
    std::vector<RatioSample> samples;
    double final_error;
    bool pass; // final_error <= tolerance and |ratio - target| weakly decreasing
};

struct CorollaryCheck {
    std::string name;
    double lower; // -inf when one-sided
    double upper; // +inf when one-sided
    double observed;
    bool pass;
};

struct LimitReport {
    std::vector<LimitCheck> limits;
    std::vector<CorollaryCheck> corollaries;
    bool all_pass;
};

/// The four asymptotic-ratio checks (both families, both ends) and the two
/// corollary bands. Failures are recorded in the report, not thrown.
LimitReport limit_report();

struct StrebelRow {
    double lambda;
    double log_K_minlag;         // log K of the extension with lambda_k = lambda
    double log_K_extremal_scale; // 2 log lambda, the extremal growth scale
    double gap;                  // log_K_minlag - 2 log lambda
};

/// Compares the extension's dilatation growth with the quadratic extremal
/// scale. Each lambda >= 10 is inverted to eps by bisection in log eps over
/// [-40, -1] (lambda_k is monotone there). Throws BisectionFailure when the
/// target is not bracketed.
std::vector<StrebelRow> strebel_gap(const std::vector<double>& lambdas);

/// CSV with the exact header
/// family,param_kind,param,log_K,cr_norm,cr_norm_kind,ratio
/// and shortest round-trip decimals. Byte-identical across runs.
std::string to_csv(const std::vector<RatioSample>& rows);
std::string to_csv(const std::vector<StrebelRow>& rows);

std::string to_json(const std::vector<RatioSample>& rows);
std::string to_json(const LimitReport& report);
std::string to_json(const std::vector<StrebelRow>& rows);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

} // namespace minlag
