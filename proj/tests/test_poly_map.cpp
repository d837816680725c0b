#include "doctest.h"

#include <cmath>
#include <complex>

#include <nlohmann/json.hpp>

#include "pluripot/closed_forms.hpp"
#include "pluripot/errors.hpp"
#include "pluripot/poly_map.hpp"
#include "pluripot/util.hpp"

using namespace pluripot;

TEST_CASE("builtin maps are present and validate") {
    const auto& maps = builtin_maps();
    for (const char* name : {"T1", "Qmap", "T2", "G", "F_pac"}) {
        REQUIRE(maps.count(name) == 1);
        CHECK_NOTHROW(maps.at(name).validate());
    }
    CHECK(maps.at("G").a == doctest::Approx(2.0));
    CHECK(maps.at("G").b == 2);
    CHECK(maps.at("F_pac").a == doctest::Approx(1.0));
    CHECK(maps.at("F_pac").b == 2);
}

TEST_CASE("map evaluation basics") {
    const PolyMap2 id = identity_map();
    const CPoint2 z{Complex(1.3, -0.2), Complex(0.4, 2.0)};
    const CPoint2 w = id.eval(z);
    CHECK(std::abs(w.z1 - z.z1) < 1e-15);
    CHECK(std::abs(w.z2 - z.z2) < 1e-15);

    const CPoint2 f = builtin_maps().at("F_pac").eval(CPoint2::from_real(2.0, 3.0));
    CHECK(f.z1.real() == doctest::Approx(2.0));
    CHECK(f.z2.real() == doctest::Approx(9.0));

    // G maps (z1, z2) to ((z1 - z2)^2, 2 z1 z2).
    const CPoint2 g = builtin_maps().at("G").eval(CPoint2::from_real(3.0, 1.0));
    CHECK(g.z1.real() == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(g.z2.real() == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("composition reproduces the builtin chain") {
    const auto& maps = builtin_maps();
    const PolyMap2 chain = compose(maps.at("T2"), compose(maps.at("Qmap"), maps.at("T1")));
    CHECK(map_coeff_distance(chain, maps.at("G")) <= 1e-12);
    CHECK(chain.b == 2);
    CHECK(chain.a == doctest::Approx(2.0));
}

TEST_CASE("composition multiplies the declared degrees") {
    const PolyMap2 q = builtin_maps().at("Qmap");
    const PolyMap2 q2 = compose(q, q);
    CHECK(q2.b == 4);
    CHECK(q2.a == doctest::Approx(4.0));
    const CPoint2 w = q2.eval(CPoint2::from_real(2.0, 0.5));
    CHECK(w.z1.real() == doctest::Approx(16.0).epsilon(1e-14));
    CHECK(w.z2.real() == doctest::Approx(0.0625).epsilon(1e-14));

    // Exceeding the composite degree cap throws.
    PolyMap2 big = q;
    CHECK_THROWS_AS(
        [&] {
            for (int i = 0; i < 8; ++i) big = compose(big, q);
        }(),
        DomainError);
}

TEST_CASE("composition agrees with pointwise evaluation") {
    const auto& maps = builtin_maps();
    const PolyMap2 comp = compose(maps.at("G"), maps.at("F_pac"));
    Rng rng(808);
    for (int i = 0; i < 200; ++i) {
        const CPoint2 z{Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)),
                        Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))};
        const CPoint2 direct = maps.at("G").eval(maps.at("F_pac").eval(z));
        const CPoint2 composed = comp.eval(z);
        CHECK(std::abs(direct.z1 - composed.z1) <= 1e-10 * (1.0 + std::abs(direct.z1)));
        CHECK(std::abs(direct.z2 - composed.z2) <= 1e-10 * (1.0 + std::abs(direct.z2)));
    }
}

TEST_CASE("json round-trip preserves coefficients") {
    const PolyMap2 g = builtin_maps().at("G");
    const PolyMap2 back = PolyMap2::from_json(g.to_json());
    CHECK(map_coeff_distance(g, back) == 0.0);
    CHECK(back.a == doctest::Approx(g.a));
    CHECK(back.b == g.b);

    CHECK_THROWS_AS(PolyMap2::from_json(nlohmann::json{{"a", 1.0}}), DescriptorError);
}

TEST_CASE("declared growth is supported by random sampling") {
    Rng rng(161803);
    const double ratio = properness_min_ratio(builtin_maps().at("G"), 40.0, 200, rng);
    CHECK(ratio > 0.0);
}

TEST_CASE("sandwich collapses when a equals b") {
    const PolyMap2 g = builtin_maps().at("G");
    Rng rng(271828);
    for (int i = 0; i < 100; ++i) {
        const CPoint2 z{Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)),
                        Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))};
        const auto [lo, hi] = sandwich(v_simplex, g, z);
        CHECK(lo == doctest::Approx(hi).epsilon(1e-14));
        CHECK(lo == doctest::Approx(v_quarterpair(z)).epsilon(1e-9));
    }
}

TEST_CASE("validate rejects broken invariants") {
    PolyMap2 bad = builtin_maps().at("F_pac");
    bad.a = 5.0;  // growth exponent above the total degree
    CHECK_THROWS_AS(bad.validate(), DescriptorError);
}
