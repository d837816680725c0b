#include "doctest.h"

#include <cmath>
#include <vector>

#include "pluripot/closed_forms.hpp"
#include "pluripot/errors.hpp"
#include "pluripot/poly_map.hpp"
#include "pluripot/util.hpp"

using namespace pluripot;

namespace {

CPoint2 random_cpoint(Rng& rng, double box) {
    return CPoint2{Complex(rng.uniform(-box, box), rng.uniform(-box, box)),
                   Complex(rng.uniform(-box, box), rng.uniform(-box, box))};
}

}  // namespace

TEST_CASE("frozen values of the closed forms") {
    // acosh(7) = 2 acosh(2), so v_simplex(2,2) = 2 log(2 + sqrt 3).
    CHECK(v_simplex(CPoint2::from_real(2.0, 2.0)) ==
          doctest::Approx(2.0 * 1.3169578969248166).epsilon(1e-15));
    CHECK(v_quarterpair(CPoint2::from_real(2.0, 2.0)) ==
          doctest::Approx(0.5 * std::acosh(15.0)).epsilon(1e-15));
    CHECK(v_realdisk(CPoint2::from_real(2.0, 0.0)) ==
          doctest::Approx(0.5 * std::acosh(7.0)).epsilon(1e-15));
    CHECK(v_square(CPoint2::from_real(2.0, 0.5)) ==
          doctest::Approx(1.3169578969248166).epsilon(1e-15));
}

TEST_CASE("closed forms vanish on their sets") {
    Rng rng(5150);
    for (int i = 0; i < 500; ++i) {
        // Simplex sample by folding a square point.
        double x = rng.uniform(0.0, 1.0), y = rng.uniform(0.0, 1.0);
        if (x + y > 1.0) {
            x = 1.0 - x;
            y = 1.0 - y;
        }
        CHECK(v_simplex(CPoint2::from_real(x, y)) == 0.0);

        const double r = std::sqrt(rng.uniform(0.0, 1.0));
        const double th = rng.uniform(0.0, 2.0 * 3.141592653589793);
        CHECK(v_realdisk(CPoint2::from_real(r * std::cos(th), r * std::sin(th))) == 0.0);
        CHECK(v_square(CPoint2::from_real(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))) ==
              0.0);

        const double q = rng.uniform(0.0, 3.141592653589793 / 2.0);
        const double sgn = rng.uniform() < 0.5 ? -1.0 : 1.0;
        CHECK(v_quarterpair(CPoint2::from_real(sgn * r * std::cos(q), sgn * r * std::sin(q))) ==
              0.0);
    }
}

TEST_CASE("closed forms are positive off their sets") {
    CHECK(v_simplex(CPoint2::from_real(1.2, 0.3)) > 0.0);
    CHECK(v_realdisk(CPoint2::from_real(1.1, 0.0)) > 0.0);
    CHECK(v_square(CPoint2::from_real(0.0, 1.05)) > 0.0);
    CHECK(v_quarterpair(CPoint2::from_real(0.5, -0.25)) > 0.0);
    CHECK(v_quarterpair(CPoint2{Complex(0.2, 0.4), Complex(0.1, 0.0)}) > 0.0);
}

TEST_CASE("pullback identity between the simplex and quarter-pair forms") {
    const PolyMap2 g = builtin_maps().at("G");
    Rng rng(424242);
    for (int i = 0; i < 2000; ++i) {
        const CPoint2 z = random_cpoint(rng, 2.5);
        const double lhs = v_simplex(g.eval(z));
        const double rhs = 2.0 * v_quarterpair(z);
        CHECK(std::fabs(lhs - rhs) <= 1e-10 * (1.0 + std::fabs(rhs)));
    }
}

TEST_CASE("square form dominates from inside the disk form") {
    // The square contains the disk, so its extremal function is pointwise smaller.
    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        const CPoint2 z = random_cpoint(rng, 3.0);
        CHECK(v_square(z) <= v_realdisk(z) + 1e-12);
    }
}

TEST_CASE("logarithmic growth at large radius") {
    // V(t z) - log t stays bounded as t grows.
    const CPoint2 z = CPoint2::from_real(1.7, 0.9);
    for (double t : {1e3, 1e6}) {
        const CPoint2 tz = CPoint2::from_real(1.7 * t, 0.9 * t);
        CHECK(std::fabs(v_simplex(tz) - v_simplex(z) - std::log(t)) < 1.0);
        CHECK(std::fabs(v_realdisk(tz) - v_realdisk(z) - std::log(t)) < 1.0);
    }
}

TEST_CASE("density closed forms") {
    const SetDescriptor disk = SetDescriptor::named("realdisk");
    CHECK(density_formula(disk, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(density_formula(disk, 0.6, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(1.0 - 0.36)).epsilon(1e-15));

    const SetDescriptor square = SetDescriptor::named("square");
    CHECK(density_formula(square, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(density_formula(square, 0.5, 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));

    const SetDescriptor qp = SetDescriptor::named("quarterpair");
    CHECK(density_formula(qp, 0.3, 0.4) == doctest::Approx(0.7 / 0.3).epsilon(1e-14));

    CHECK_THROWS_AS(density_formula(disk, 1.5, 0.0), DomainError);
    CHECK_THROWS_AS(density_formula(qp, 0.3, 0.0), DomainError);  // axis singularity
    CHECK_THROWS_AS(density_formula(SetDescriptor::named("pacman"), 0.5, 0.1), DomainError);
}

TEST_CASE("closed_form_value pulls back through affine maps") {
    const SetDescriptor interval = SetDescriptor::named("interval");
    CHECK(closed_form_value(interval, CPoint2::from_real(2.0, 0.0)) ==
          doctest::Approx(1.3169578969248166).epsilon(1e-15));

    SetDescriptor stretched = SetDescriptor::named("interval");
    stretched.affine.m = {{{2.0, 0.0}, {0.0, 1.0}}};
    CHECK(closed_form_value(stretched, CPoint2::from_real(4.0, 0.0)) ==
          doctest::Approx(1.3169578969248166).epsilon(1e-14));

    CHECK_THROWS_AS(closed_form_value(interval, CPoint2::from_real(2.0, 0.5)), DomainError);
    CHECK_THROWS_AS(closed_form_value(SetDescriptor::named("pacman"),
                                      CPoint2::from_real(3.0, 0.0)),
                    DomainError);
}
