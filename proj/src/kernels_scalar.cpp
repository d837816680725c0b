// Scalar reference kernels.  The SIMD variants must reproduce these loops
// bit-for-bit: identical operation order per lane, no fused multiply-add
// (this translation unit is compiled with contraction disabled).

#include <algorithm>
#include <cmath>

#include "kernels_impl.hpp"
#include "pluripot/kernels.hpp"

namespace pluripot::detail {

void v_real_batch_scalar(int form, const double* xs, const double* ys, std::size_t n,
                         double* out) {
    switch (static_cast<FormKind>(form)) {
        case FormKind::simplex:
            for (std::size_t i = 0; i < n; ++i) {
                const double x = xs[i], y = ys[i];
                const double a = std::abs(x);
                const double b = std::abs(y);
                const double t = x + y;
                const double c = std::abs(t - 1.0);
                const double arg = (a + b) + c;
                out[i] = acosh_or_zero(arg);
            }
            break;
        case FormKind::quarterpair:
            for (std::size_t i = 0; i < n; ++i) {
                const double x = xs[i], y = ys[i];
                const double x2 = x * x;
                const double y2 = y * y;
                const double s = (1.0 - x2) - y2;
                const double t1 = std::abs(s);
                const double d = x - y;
                const double t2 = d * d;
                const double p = x * y;
                const double t3 = 2.0 * std::abs(p);
                const double arg = (t1 + t2) + t3;
                out[i] = 0.5 * acosh_or_zero(arg);
            }
            break;
        case FormKind::realdisk:
            for (std::size_t i = 0; i < n; ++i) {
                const double x = xs[i], y = ys[i];
                const double x2 = x * x;
                const double y2 = y * y;
                const double r = x2 + y2;
                const double t = std::abs(r - 1.0);
                const double arg = r + t;
                out[i] = 0.5 * acosh_or_zero(arg);
            }
            break;
        case FormKind::square:
            for (std::size_t i = 0; i < n; ++i) {
                const double ax = std::abs(xs[i]);
                const double ay = std::abs(ys[i]);
                const double gx = green_real_from_abs(ax);
                const double gy = green_real_from_abs(ay);
                out[i] = std::max(gx, gy);
            }
            break;
    }
}

void poly_dot_batch_scalar(const double* xs, const double* ys, std::size_t n_points,
                           const int* jx, const int* jy, const double* w, std::size_t n_terms,
                           int max_degree, double* out) {
    double px[65], py[65];
    for (std::size_t i = 0; i < n_points; ++i) {
        const double x = xs[i], y = ys[i];
        px[0] = 1.0;
        py[0] = 1.0;
        for (int a = 1; a <= max_degree; ++a) {
            px[a] = px[a - 1] * x;
            py[a] = py[a - 1] * y;
        }
        double acc = 0.0;
        for (std::size_t t = 0; t < n_terms; ++t) {
            acc = acc + w[t] * (px[jx[t]] * py[jy[t]]);
        }
        out[i] = acc;
    }
}

}  // namespace pluripot::detail
