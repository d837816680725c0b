#pragma once

// Shared per-lane pieces of the batch kernels.  Both the scalar reference
// translation unit and the SIMD translation units include this header, so the
// transcendental finishing steps are literally the same code (and the same
// libm calls) in every variant.

#include <cmath>

#include "pluripot/complex_analysis.hpp"

namespace pluripot::detail {

// log h(x) for real x, clamped to 0 at and below the snap guard.
inline double acosh_or_zero(double x) {
    if (x <= 1.0 + kGreenArgSnap) return 0.0;
    return std::acosh(x);
}

// Interval Green function of a real abscissa given |x|.
inline double green_real_from_abs(double ax) { return acosh_or_zero(ax); }

void v_real_batch_scalar(int form, const double* xs, const double* ys, std::size_t n,
                         double* out);
void poly_dot_batch_scalar(const double* xs, const double* ys, std::size_t n_points,
                           const int* jx, const int* jy, const double* w, std::size_t n_terms,
                           int max_degree, double* out);

#if defined(PLURIPOT_HAVE_AVX2)
void v_real_batch_avx2(int form, const double* xs, const double* ys, std::size_t n, double* out);
void poly_dot_batch_avx2(const double* xs, const double* ys, std::size_t n_points, const int* jx,
                         const int* jy, const double* w, std::size_t n_terms, int max_degree,
                         double* out);
#endif

}  // namespace pluripot::detail
