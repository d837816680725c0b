#include "doctest.h"

#include <cmath>
#include <complex>

#include "pluripot/complex_analysis.hpp"
#include "pluripot/util.hpp"

using namespace pluripot;

TEST_CASE("joukowski_h at rational points") {
    // h(5/4) = 5/4 + 3/4 = 2 exactly.
    const Complex h = joukowski_h(Complex(1.25, 0.0));
    CHECK(h.real() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::fabs(h.imag()) < 1e-15);

    const Complex h2 = joukowski_h(Complex(2.0, 0.0));
    CHECK(h2.real() == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("joukowski_h inverts the Joukowski map") {
    Rng rng(91);
    for (int i = 0; i < 10000; ++i) {
        const Complex zeta(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
        const Complex h = joukowski_h(zeta);
        const Complex back = 0.5 * (h + 1.0 / h);
        CHECK(std::abs(back - zeta) <= 1e-12 * (1.0 + std::abs(zeta)));
        CHECK(std::abs(h) >= 1.0 - 1e-12);
    }
}

TEST_CASE("green_interval vanishes on the interval") {
    CHECK(green_interval(Complex(0.0, 0.0)) == 0.0);
    CHECK(green_interval(Complex(1.0, 0.0)) == 0.0);
    CHECK(green_interval(Complex(-1.0, 0.0)) == 0.0);
    CHECK(green_interval(Complex(0.73, 0.0)) == 0.0);
}

TEST_CASE("green_interval frozen values") {
    // g(2) = log(2 + sqrt 3); g(i) = asinh(1) = log(1 + sqrt 2).
    CHECK(green_interval(Complex(2.0, 0.0)) ==
          doctest::Approx(1.3169578969248166).epsilon(1e-15));
    CHECK(green_interval(Complex(0.0, 1.0)) ==
          doctest::Approx(std::log(1.0 + std::sqrt(2.0))).epsilon(1e-15));
}

TEST_CASE("green_interval is positive off the interval") {
    Rng rng(77);
    for (int i = 0; i < 2000; ++i) {
        const double x = rng.uniform(-2.0, 2.0);
        const double y = rng.uniform(0.01, 1.0);
        CHECK(green_interval(Complex(x, y)) > 0.0);
    }
}

TEST_CASE("acosh_ge1 snaps arguments within the guard to zero") {
    CHECK(acosh_ge1(1.0) == 0.0);
    CHECK(acosh_ge1(1.0 - 0.5 * kGreenArgSnap) == 0.0);
    CHECK(acosh_ge1(2.0) == doctest::Approx(std::acosh(2.0)).epsilon(1e-15));
    CHECK(acosh_ge1(1.0 + 1e-6) > 0.0);
}
