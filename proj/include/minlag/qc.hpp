#pragma once

#include "minlag/geometry.hpp"
#include "minlag/mat2.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace minlag {

/// Symmetric positive definite 2x2 metric at a chart point.
class Metric2 {
public:
    Metric2(double E, double F, double G);

    double E() const { return E_; }
    double F() const { return F_; }
    double G() const { return G_; }
    Mat2 mat() const { return {E_, F_, F_, G_}; }

private:
    double E_, F_, G_;
};

enum class Frame { coordinate, orthonormal };

/// 2x2 tensor with the frame it is expressed in.
struct Tensor2 {
    Mat2 m;
    Frame frame = Frame::coordinate;
};

/// Self-adjointness of b with respect to g: g(b v, w) = g(v, b w), i.e.
/// g b symmetric in the tensor's own frame (plain symmetry when the frame
/// is orthonormal).
bool is_self_adjoint(const Tensor2& b, const Metric2& g, double tol = 1e-12);

using ChartMap = std::function<Vec2(double, double)>;
using MetricField = std::function<Metric2(double, double)>;
using JacobianFn = std::function<Mat2(double, double)>;

/// Pullback J^T g(f(p)) J of target_metric under map at p, with the Jacobian
/// by central differences of step h (or the analytic Jacobian when given).
/// Throws NonPositiveMetric if the numeric result is not positive definite.
Metric2 pullback_metric(const ChartMap& map, const MetricField& target_metric,
                        double x, double y, double h = kFdStep,
                        const JacobianFn& analytic_jacobian = nullptr);

/// Unique SPD square root: (M + sqrt(det M) Id) / sqrt(tr M + 2 sqrt(det M)).
Mat2 spd_sqrt_2x2(const Mat2& m);

struct DilatationSample {
    double x = 0.0;
    double y = 0.0;
    double eta_plus = 1.0;
    double eta_minus = 1.0;
    double K_point = 1.0;
};

struct GridSpec {
    double x_lo, x_hi;
    double y_lo, y_hi;
    int nx = 129;
    int ny = 129;
};

/// Principal stretches of map at one point: the pullback is normalized in an
/// orthonormal frame of the source metric, so eta+- are plain eigenvalues of
/// the SPD root b.
DilatationSample dilatation_at(const ChartMap& map, const MetricField& source_metric,
                               const MetricField& target_metric, double x, double y,
                               double h = kFdStep, const JacobianFn& jac = nullptr);

/// Pointwise dilatation over a grid. Rows are evaluated in parallel and
/// emitted in grid order.
std::vector<DilatationSample> dilatation_field(const ChartMap& map,
                                               const MetricField& source_metric,
                                               const MetricField& target_metric,
                                               const GridSpec& grid, double h = kFdStep,
                                               const JacobianFn& jac = nullptr);

/// sup of K over the grid, refined by golden-section search in the first
/// coordinate through the grid argmax (both families peak on a vertical
/// line of the chart). Returns the refined value and achieving point.
struct MaxDilatation {
    double K;
    double x;
    double y;
};
MaxDilatation max_dilatation_numeric(const ChartMap& map, const MetricField& source_metric,
                                     const MetricField& target_metric, const GridSpec& grid,
                                     double h = kFdStep, const JacobianFn& jac = nullptr);

using TensorField = std::function<Mat2(double, double)>;

/// Components of (d^nabla b)(d_1, d_2) at p: covariant derivatives assembled
/// from central-difference partials of the coordinate-frame field b and the
/// supplied Christoffel symbols ([d_1, d_2] = 0 for coordinate fields).
Vec2 codazzi_residual_numeric(const TensorField& b, const ChristoffelField& gamma,
                              double x, double y, double step);

} // namespace minlag
