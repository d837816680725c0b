// AVX2 kernel variants.  Four points per vector; the arithmetic mirrors the
// scalar reference operation-for-operation (contraction disabled, no FMA), and
// the transcendental finish is the shared per-lane helper, so results are
// bit-identical to the scalar kernels.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "kernels_impl.hpp"
#include "pluripot/kernels.hpp"

namespace pluripot::detail {

namespace {

inline __m256d abs_pd(__m256d v) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    return _mm256_and_pd(v, mask);
}

}  // namespace

void v_real_batch_avx2(int form, const double* xs, const double* ys, std::size_t n,
                       double* out) {
    const std::size_t n4 = n / 4 * 4;
    const __m256d one = _mm256_set1_pd(1.0);
    alignas(32) double arg[4];
    switch (static_cast<FormKind>(form)) {
        case FormKind::simplex:
            for (std::size_t i = 0; i < n4; i += 4) {
                const __m256d x = _mm256_loadu_pd(xs + i);
                const __m256d y = _mm256_loadu_pd(ys + i);
                const __m256d a = abs_pd(x);
                const __m256d b = abs_pd(y);
                const __m256d t = _mm256_add_pd(x, y);
                const __m256d c = abs_pd(_mm256_sub_pd(t, one));
                _mm256_store_pd(arg, _mm256_add_pd(_mm256_add_pd(a, b), c));
                for (int l = 0; l < 4; ++l) out[i + l] = acosh_or_zero(arg[l]);
            }
            break;
        case FormKind::quarterpair:
            for (std::size_t i = 0; i < n4; i += 4) {
                const __m256d x = _mm256_loadu_pd(xs + i);
                const __m256d y = _mm256_loadu_pd(ys + i);
                const __m256d x2 = _mm256_mul_pd(x, x);
                const __m256d y2 = _mm256_mul_pd(y, y);
                const __m256d s = _mm256_sub_pd(_mm256_sub_pd(one, x2), y2);
                const __m256d t1 = abs_pd(s);
                const __m256d d = _mm256_sub_pd(x, y);
                const __m256d t2 = _mm256_mul_pd(d, d);
                const __m256d p = _mm256_mul_pd(x, y);
                const __m256d t3 = _mm256_mul_pd(_mm256_set1_pd(2.0), abs_pd(p));
                _mm256_store_pd(arg, _mm256_add_pd(_mm256_add_pd(t1, t2), t3));
                for (int l = 0; l < 4; ++l) out[i + l] = 0.5 * acosh_or_zero(arg[l]);
            }
            break;
        case FormKind::realdisk:
            for (std::size_t i = 0; i < n4; i += 4) {
                const __m256d x = _mm256_loadu_pd(xs + i);
                const __m256d y = _mm256_loadu_pd(ys + i);
                const __m256d x2 = _mm256_mul_pd(x, x);
                const __m256d y2 = _mm256_mul_pd(y, y);
                const __m256d r = _mm256_add_pd(x2, y2);
                const __m256d t = abs_pd(_mm256_sub_pd(r, one));
                _mm256_store_pd(arg, _mm256_add_pd(r, t));
                for (int l = 0; l < 4; ++l) out[i + l] = 0.5 * acosh_or_zero(arg[l]);
            }
            break;
        case FormKind::square: {
            alignas(32) double ax[4], ay[4];
            for (std::size_t i = 0; i < n4; i += 4) {
                _mm256_store_pd(ax, abs_pd(_mm256_loadu_pd(xs + i)));
                _mm256_store_pd(ay, abs_pd(_mm256_loadu_pd(ys + i)));
                for (int l = 0; l < 4; ++l) {
                    const double gx = green_real_from_abs(ax[l]);
                    const double gy = green_real_from_abs(ay[l]);
                    out[i + l] = std::max(gx, gy);
                }
            }
            break;
        }
    }
    if (n4 < n) v_real_batch_scalar(form, xs + n4, ys + n4, n - n4, out + n4);
}

void poly_dot_batch_avx2(const double* xs, const double* ys, std::size_t n_points, const int* jx,
                         const int* jy, const double* w, std::size_t n_terms, int max_degree,
                         double* out) {
    alignas(32) __m256d px[65], py[65];
    const std::size_t n4 = n_points / 4 * 4;
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d x = _mm256_loadu_pd(xs + i);
        const __m256d y = _mm256_loadu_pd(ys + i);
        px[0] = _mm256_set1_pd(1.0);
        py[0] = _mm256_set1_pd(1.0);
        for (int a = 1; a <= max_degree; ++a) {
            px[a] = _mm256_mul_pd(px[a - 1], x);
            py[a] = _mm256_mul_pd(py[a - 1], y);
        }
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t t = 0; t < n_terms; ++t) {
            const __m256d wv = _mm256_set1_pd(w[t]);
            const __m256d prod = _mm256_mul_pd(px[jx[t]], py[jy[t]]);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(wv, prod));
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (n4 < n_points)
        poly_dot_batch_scalar(xs + n4, ys + n4, n_points - n4, jx, jy, w, n_terms, max_degree,
                              out + n4);
}

}  // namespace pluripot::detail
