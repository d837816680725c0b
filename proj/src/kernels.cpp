#include "pluripot/kernels.hpp"

#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "pluripot/errors.hpp"

namespace pluripot {

namespace {

bool cpu_has_avx2() {
#if defined(PLURIPOT_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend pick_default_backend() {
    if (const char* env = std::getenv("PLURIPOT_KERNELS")) {
        const std::string v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2" && backend_available(Backend::avx2)) return Backend::avx2;
    }
    return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

Backend& backend_slot() {
    static Backend b = pick_default_backend();
    return b;
}

}  // namespace

bool backend_available(Backend b) {
    if (b == Backend::scalar) return true;
#if defined(PLURIPOT_HAVE_AVX2)
    return cpu_has_avx2();
#else
    return false;
#endif
}

const char* backend_name(Backend b) { return b == Backend::scalar ? "scalar" : "avx2"; }

Backend active_backend() { return backend_slot(); }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw DomainError(std::string("kernel backend unavailable: ") + backend_name(b));
    backend_slot() = b;
}

void v_real_batch(FormKind form, const double* xs, const double* ys, std::size_t n,
                  double* out) {
#if defined(PLURIPOT_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        detail::v_real_batch_avx2(static_cast<int>(form), xs, ys, n, out);
        return;
    }
#endif
    detail::v_real_batch_scalar(static_cast<int>(form), xs, ys, n, out);
}

void poly_dot_batch(const double* xs, const double* ys, std::size_t n_points, const int* jx,
                    const int* jy, const double* w, std::size_t n_terms, int max_degree,
                    double* out) {
    if (max_degree < 0 || max_degree > 64)
        throw DomainError("poly_dot_batch: max_degree must lie in [0, 64]");
#if defined(PLURIPOT_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        detail::poly_dot_batch_avx2(xs, ys, n_points, jx, jy, w, n_terms, max_degree, out);
        return;
    }
#endif
    detail::poly_dot_batch_scalar(xs, ys, n_points, jx, jy, w, n_terms, max_degree, out);
}

}  // namespace pluripot
