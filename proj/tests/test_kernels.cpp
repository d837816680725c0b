#include "doctest.h"

#include <cmath>
#include <cstring>
#include <vector>

#include "pluripot/closed_forms.hpp"
#include "pluripot/errors.hpp"
#include "pluripot/kernels.hpp"
#include "pluripot/util.hpp"

using namespace pluripot;

namespace {

struct BackendGuard {
    Backend saved;
    BackendGuard() : saved(active_backend()) {}
    ~BackendGuard() { set_backend(saved); }
};

}  // namespace

TEST_CASE("backend names and availability") {
    CHECK(backend_available(Backend::scalar));
    CHECK(std::string(backend_name(Backend::scalar)) == "scalar");
    CHECK(std::string(backend_name(Backend::avx2)) == "avx2");
}

TEST_CASE("scalar and simd closed-form batches agree bitwise") {
    if (!backend_available(Backend::avx2)) return;
    BackendGuard guard;

    Rng rng(31337);
    const std::size_t n = 1001;  // deliberately not a vector-width multiple
    std::vector<double> xs(n), ys(n), scalar_out(n), simd_out(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = rng.uniform(-3.0, 3.0);
        ys[i] = rng.uniform(-3.0, 3.0);
    }
    for (FormKind form : {FormKind::simplex, FormKind::quarterpair, FormKind::realdisk,
                          FormKind::square}) {
        set_backend(Backend::scalar);
        v_real_batch(form, xs.data(), ys.data(), n, scalar_out.data());
        set_backend(Backend::avx2);
        v_real_batch(form, xs.data(), ys.data(), n, simd_out.data());
        CHECK(std::memcmp(scalar_out.data(), simd_out.data(), n * sizeof(double)) == 0);
    }
}

TEST_CASE("scalar and simd pricing kernels agree bitwise") {
    if (!backend_available(Backend::avx2)) return;
    BackendGuard guard;

    Rng rng(777);
    const std::size_t n = 517;
    const std::size_t terms = 12;
    std::vector<double> xs(n), ys(n), w(terms), scalar_out(n), simd_out(n);
    std::vector<int> jx(terms), jy(terms);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = rng.uniform(-1.0, 1.0);
        ys[i] = rng.uniform(-1.0, 1.0);
    }
    int max_degree = 0;
    for (std::size_t t = 0; t < terms; ++t) {
        jx[t] = static_cast<int>(rng.next_u64() % 9);
        jy[t] = static_cast<int>(rng.next_u64() % 9);
        w[t] = rng.uniform(-2.0, 2.0);
        max_degree = std::max({max_degree, jx[t], jy[t]});
    }
    set_backend(Backend::scalar);
    poly_dot_batch(xs.data(), ys.data(), n, jx.data(), jy.data(), w.data(), terms, max_degree,
                   scalar_out.data());
    set_backend(Backend::avx2);
    poly_dot_batch(xs.data(), ys.data(), n, jx.data(), jy.data(), w.data(), terms, max_degree,
                   simd_out.data());
    CHECK(std::memcmp(scalar_out.data(), simd_out.data(), n * sizeof(double)) == 0);
}

TEST_CASE("pricing kernel matches a direct reference evaluation") {
    Rng rng(2024);
    const std::size_t n = 64;
    const std::size_t terms = 7;
    std::vector<double> xs(n), ys(n), w(terms), out(n);
    std::vector<int> jx{0, 1, 2, 3, 0, 2, 5}, jy{0, 0, 1, 2, 4, 2, 0};
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = rng.uniform(-1.0, 1.0);
        ys[i] = rng.uniform(-1.0, 1.0);
    }
    for (std::size_t t = 0; t < terms; ++t) w[t] = rng.uniform(-1.0, 1.0);
    poly_dot_batch(xs.data(), ys.data(), n, jx.data(), jy.data(), w.data(), terms, 5,
                   out.data());
    for (std::size_t i = 0; i < n; ++i) {
        double ref = 0.0;
        for (std::size_t t = 0; t < terms; ++t)
            ref += w[t] * std::pow(xs[i], jx[t]) * std::pow(ys[i], jy[t]);
        CHECK(out[i] == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("batch closed forms match the pointwise evaluators") {
    Rng rng(606);
    const std::size_t n = 256;
    std::vector<double> xs(n), ys(n), out(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = rng.uniform(-2.0, 2.0);
        ys[i] = rng.uniform(-2.0, 2.0);
    }
    v_real_slice(FormKind::realdisk, xs.data(), ys.data(), n, out.data());
    for (std::size_t i = 0; i < n; ++i)
        CHECK(out[i] == v_realdisk(CPoint2::from_real(xs[i], ys[i])));
}
