#include "minlag/neldermead.hpp"

#include <algorithm>
#include <cmath>

namespace minlag {

NelderMeadResult nelder_mead_3(const std::function<double(const std::array<double, 3>&)>& f,
                               const std::array<double, 3>& start, double initial_step,
                               double f_tol, int max_iters) {
    constexpr int n = 3;
    std::array<std::array<double, 3>, n + 1> x;
    std::array<double, n + 1> fx;
    x[0] = start;
    for (int i = 1; i <= n; ++i) {
        x[i] = start;
        x[i][i - 1] += initial_step;
    }
    for (int i = 0; i <= n; ++i) fx[i] = f(x[i]);

    const auto order = [&]() {
        for (int i = 1; i <= n; ++i) {
            auto xv = x[i];
            auto fv = fx[i];
            int j = i - 1;
            while (j >= 0 && fx[j] > fv) {
                x[j + 1] = x[j];
                fx[j + 1] = fx[j];
                --j;
            }
            x[j + 1] = xv;
            fx[j + 1] = fv;
        }
    };
    const auto blend = [](const std::array<double, 3>& a, const std::array<double, 3>& b,
                          double t) {
        std::array<double, 3> r;
        for (int i = 0; i < 3; ++i) r[i] = a[i] + t * (b[i] - a[i]);
        return r;
    };

    int it = 0;
    for (; it < max_iters; ++it) {
        order();
        if (std::fabs(fx[n] - fx[0]) <= f_tol * (1.0 + std::fabs(fx[0]))) break;

        std::array<double, 3> centroid{};
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < 3; ++d) centroid[d] += x[i][d] / n;

        const auto xr = blend(centroid, x[n], -1.0); // reflection
        const double fr = f(xr);
        if (fr < fx[0]) {
            const auto xe = blend(centroid, xr, 2.0); // expansion
            const double fe = f(xe);
            if (fe < fr) {
                x[n] = xe;
                fx[n] = fe;
            } else {
                x[n] = xr;
                fx[n] = fr;
            }
        } else if (fr < fx[n - 1]) {
            x[n] = xr;
            fx[n] = fr;
        } else {
            const bool outside = fr < fx[n];
            const auto xc = outside ? blend(centroid, xr, 0.5) : blend(centroid, x[n], 0.5);
            const double fc = f(xc);
            if (fc < (outside ? fr : fx[n])) {
                x[n] = xc;
                fx[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) { // shrink toward the best vertex
                    x[i] = blend(x[0], x[i], 0.5);
                    fx[i] = f(x[i]);
                }
            }
        }
    }
    order();
    return {x[0], fx[0], it};
}

} // namespace minlag
