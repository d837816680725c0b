#pragma once

#include <cstddef>
#include <string>

namespace pluripot {

// Real-slice closed forms evaluated by the batch kernels.
enum class FormKind { simplex, quarterpair, realdisk, square };

enum class Backend { scalar, avx2 };

// Active kernel backend.  Defaults to the widest instruction set available at
// runtime; the PLURIPOT_KERNELS environment variable ("scalar"/"avx2")
// overrides the default.  Scalar and SIMD variants are bit-for-bit equivalent
// (same operation order, contraction disabled, shared per-lane libm calls),
// so the choice never changes results.
Backend active_backend();
void set_backend(Backend b);  // throws DomainError when unavailable
bool backend_available(Backend b);
const char* backend_name(Backend b);

// out[i] = V_form(xs[i], ys[i]) on the real slice.
void v_real_batch(FormKind form, const double* xs, const double* ys, std::size_t n,
                  double* out);

// out[i] = sum_t w[t] * xs[i]^jx[t] * ys[i]^jy[t]; every jx/jy <= max_degree,
// max_degree <= 64.  This is the LP pricing workhorse.
void poly_dot_batch(const double* xs, const double* ys, std::size_t n_points, const int* jx,
                    const int* jy, const double* w, std::size_t n_terms, int max_degree,
                    double* out);

}  // namespace pluripot
