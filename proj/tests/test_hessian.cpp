#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>

#include "pluripot/closed_forms.hpp"
#include "pluripot/errors.hpp"
#include "pluripot/hessian.hpp"

using namespace pluripot;

TEST_CASE("hessian of the squared norm is the identity") {
    const Evaluator v = [](const CPoint2& z) { return std::norm(z.z1) + std::norm(z.z2); };
    const CPoint2 at{Complex(0.3, -0.7), Complex(1.1, 0.2)};
    const Hermitian2 h = complex_hessian_fd(v, at, 1e-4);
    CHECK(h.h11 == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(h.h22 == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(std::abs(h.h12) < 1e-7);
    CHECK(h.det() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(h.min_eigenvalue() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(h.spectral_norm() == doctest::Approx(1.0).epsilon(1e-6));

    // residual = |det| / (1 + ||H||^2) = 1/2 for the identity Hessian.
    CHECK(maximality_residual(v, at, 1e-4) == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("pluriharmonic functions have vanishing hessian") {
    const Evaluator v = [](const CPoint2& z) { return std::log(std::abs(z.z1)); };
    const CPoint2 at{Complex(2.0, 0.5), Complex(0.0, 0.0)};
    const Hermitian2 h = complex_hessian_fd(v, at, 1e-3);
    CHECK(std::fabs(h.h11) < 1e-6);
    CHECK(std::fabs(h.h22) < 1e-6);
    CHECK(std::abs(h.h12) < 1e-6);
    CHECK(maximality_residual(v, at, 1e-3) < 1e-6);
}

TEST_CASE("hermitian algebra on a known matrix") {
    Hermitian2 h;
    h.h11 = 2.0;
    h.h22 = 1.0;
    h.h12 = Complex(0.0, 1.0);
    // Eigenvalues of [[2, i], [-i, 1]] are (3 +- sqrt 5)/2.
    CHECK(h.det() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h.spectral_norm() ==
          doctest::Approx(0.5 * (3.0 + std::sqrt(5.0))).epsilon(1e-14));
    CHECK(h.min_eigenvalue() ==
          doctest::Approx(0.5 * (3.0 - std::sqrt(5.0))).epsilon(1e-14));
}

TEST_CASE("extremal functions satisfy the degenerate determinant equation") {
    // Away from the set and the branch loci the complex Hessian of the
    // extremal function has rank 1, so the scale-free residual is small.
    const CPoint2 at1{Complex(1.7, 0.4), Complex(0.9, -0.3)};
    CHECK(maximality_residual([](const CPoint2& z) { return v_quarterpair(z); }, at1, 1e-3) <
          1e-4);
    const CPoint2 at2{Complex(2.1, 0.2), Complex(1.4, 0.6)};
    CHECK(maximality_residual([](const CPoint2& z) { return v_simplex(z); }, at2, 1e-3) <
          1e-4);
    const CPoint2 at3{Complex(1.9, -0.5), Complex(0.3, 0.8)};
    CHECK(maximality_residual([](const CPoint2& z) { return v_realdisk(z); }, at3, 1e-3) <
          1e-4);
}

TEST_CASE("finite-difference stencil rejects bad input") {
    const Evaluator v = [](const CPoint2& z) { return std::norm(z.z1); };
    const CPoint2 at{Complex(0.0, 0.0), Complex(0.0, 0.0)};
    CHECK_THROWS_AS(complex_hessian_fd(v, at, 0.0), DomainError);
    CHECK_THROWS_AS(complex_hessian_fd(v, at, -1e-3), DomainError);
    const Evaluator bad = [](const CPoint2&) {
        return std::numeric_limits<double>::quiet_NaN();
    };
    CHECK_THROWS_AS(complex_hessian_fd(bad, at, 1e-3), DomainError);
}
