#include "doctest.h"

#include <array>
#include <cmath>
#include <vector>

#include "pluripot/cheb_lp.hpp"
#include "pluripot/errors.hpp"
#include "pluripot/lattice.hpp"
#include "pluripot/sets.hpp"

using namespace pluripot;

TEST_CASE("lattice enumeration in lexicographic order") {
    const auto s1 = LatticeSpec::simplex().enumerate(1);
    REQUIRE(s1.size() == 3);
    CHECK(s1[0] == std::array<int, 2>{0, 0});
    CHECK(s1[1] == std::array<int, 2>{0, 1});
    CHECK(s1[2] == std::array<int, 2>{1, 0});

    const auto p1 = LatticeSpec::pac_hull().enumerate(1);
    REQUIRE(p1.size() == 4);
    CHECK(p1[0] == std::array<int, 2>{0, 0});
    CHECK(p1[1] == std::array<int, 2>{0, 1});
    CHECK(p1[2] == std::array<int, 2>{1, 0});
    CHECK(p1[3] == std::array<int, 2>{2, 0});

    const auto i3 = LatticeSpec::interval_1d().enumerate(3);
    REQUIRE(i3.size() == 4);
    for (int j = 0; j <= 3; ++j) CHECK(i3[static_cast<std::size_t>(j)] ==
                                       std::array<int, 2>{j, 0});

    // Simplex counts follow the triangular numbers; pac-hull counts j + 2k <= 2n.
    CHECK(LatticeSpec::simplex().enumerate(4).size() == 15);
    CHECK(LatticeSpec::pac_hull().enumerate(2).size() == 9);
}

TEST_CASE("containment scales") {
    CHECK(LatticeSpec::simplex().containment_scale() == 1);
    CHECK(LatticeSpec::pac_hull().containment_scale() == 1);
    CHECK(LatticeSpec::interval_1d().containment_scale() == 1);

    LatticeSpec tiny;
    tiny.vertices = {{0.0, 0.0}, {0.25, 0.0}, {0.0, 0.25}};
    CHECK(tiny.containment_scale() == 4);

    LatticeSpec never;
    never.vertices = {{0.0, 0.0}, {0.05, 0.0}, {0.0, 0.05}};
    CHECK_THROWS_AS(never.containment_scale(), DescriptorError);
}

TEST_CASE("logarithmic indicator of the exponent hull") {
    const LatticeSpec pac = LatticeSpec::pac_hull();
    const double e = std::exp(1.0);
    CHECK(h_indicator(pac, CPoint2::from_real(e, e * e * e)) ==
          doctest::Approx(3.0).epsilon(1e-14));
    CHECK(h_indicator(pac, CPoint2::from_real(e * e, 1.1)) ==
          doctest::Approx(4.0).epsilon(1e-14));
    // Inside the unit polydisk every vertex contributes <= 0, so the sup is 0.
    CHECK(h_indicator(pac, CPoint2::from_real(0.5, 0.25)) == 0.0);
    // The zero-exponent vertex ignores a vanishing coordinate.
    CHECK(h_indicator(LatticeSpec::simplex(), CPoint2::from_real(0.0, 0.0)) == 0.0);
}

TEST_CASE("interval bound reproduces the chebyshev optimum") {
    const SetDescriptor interval = SetDescriptor::named("interval");
    const auto sweep =
        degree_sweep(interval, LatticeSpec::interval_1d(), {2.0, 0.0}, {1, 2, 4, 8});
    REQUIRE(sweep.size() == 4);
    CHECK(sweep[0].value == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(sweep[1].value == doctest::Approx(0.5 * std::log(7.0)).epsilon(1e-9));
    CHECK(sweep[2].value == doctest::Approx(0.25 * std::log(97.0)).epsilon(1e-9));
    // Frozen: (1/8) log T_8(2) = log(18817)/8.
    CHECK(sweep[3].value == doctest::Approx(1.2303144994430806).epsilon(1e-6));
    for (std::size_t i = 0; i + 1 < sweep.size(); ++i)
        CHECK(sweep[i + 1].value >= sweep[i].value - 1e-9);
}

TEST_CASE("bounds never exceed the closed form") {
    const SetDescriptor interval = SetDescriptor::named("interval");
    const double green2 = std::log(2.0 + std::sqrt(3.0));
    for (int n : {1, 2, 4, 8, 16}) {
        const LPBound b = lp_lower_bound(interval, LatticeSpec::interval_1d(), n, {2.0, 0.0});
        CHECK(b.value <= green2 + 1e-12);
        CHECK(b.value > 0.0);
    }
}

TEST_CASE("on-mesh evaluation point gives a zero bound") {
    // Exactly-on-mesh evaluation points are dominated by the sup-norm
    // constraint, so the replayed optimum clamps to zero.
    const SetDescriptor interval = SetDescriptor::named("interval");
    const Mesh mesh = build_mesh(interval, 4);
    const std::array<double, 2> z0 = mesh.points[mesh.points.size() / 3];
    const LPBound b = lp_lower_bound_on_mesh(mesh, LatticeSpec::interval_1d(), 4, z0);
    CHECK(b.value == 0.0);

    // Slightly off-mesh interior points may keep a sub-resolution positive
    // value, but never more than the mesh gap allows.
    const LPBound inside =
        lp_lower_bound(interval, LatticeSpec::interval_1d(), 4, {0.5, 0.0});
    CHECK(inside.value >= 0.0);
    CHECK(inside.value <= 1e-6);
}

TEST_CASE("certificates replay against their meshes") {
    const SetDescriptor interval = SetDescriptor::named("interval");
    const Mesh mesh = build_mesh(interval, 8);
    const LPBound b = lp_lower_bound_on_mesh(mesh, LatticeSpec::interval_1d(), 8, {2.0, 0.0});
    CHECK(replay_mesh_max(mesh, b) <= 1.0 + 1e-9);
    CHECK(replay_value(mesh, b, {2.0, 0.0}) == doctest::Approx(b.value).epsilon(1e-9));
    REQUIRE(b.certificate.size() == b.exponents.size());
    REQUIRE(b.exponents.size() == 9);
}

TEST_CASE("two-dimensional bounds approach the simplex closed form") {
    const SetDescriptor simplex = SetDescriptor::named("simplex");
    const auto sweep =
        degree_sweep(simplex, LatticeSpec::simplex(), {1.5, 1.25}, {1, 2, 4});
    const double exact = 2.1846437916051085;  // acosh(1.5 + 1.25 + 1.75)
    for (const LPBound& b : sweep) {
        CHECK(b.value <= exact + 1e-9);
        CHECK(b.value > 0.0);
    }
    CHECK(sweep[2].value >= sweep[0].value);
    CHECK(exact - sweep[2].value < 0.2);
}

TEST_CASE("degree sweep validates its degree list") {
    const SetDescriptor interval = SetDescriptor::named("interval");
    const LatticeSpec lat = LatticeSpec::interval_1d();
    CHECK_THROWS_AS(degree_sweep(interval, lat, {2.0, 0.0}, {}), DomainError);
    CHECK_THROWS_AS(degree_sweep(interval, lat, {2.0, 0.0}, {2, 3}), DomainError);
    CHECK_THROWS_AS(degree_sweep(interval, lat, {2.0, 0.0}, {4, 2}), DomainError);
    CHECK_THROWS_AS(lp_lower_bound(interval, lat, 0, {2.0, 0.0}), DomainError);
}

TEST_CASE("bound json carries the pinned fields") {
    const SetDescriptor interval = SetDescriptor::named("interval");
    const LPBound b = lp_lower_bound(interval, LatticeSpec::interval_1d(), 2, {2.0, 0.0});
    const auto j = b.to_json();
    CHECK(j.contains("value"));
    CHECK(j.contains("degree"));
    CHECK(j.contains("mesh_size"));
    CHECK(j.contains("certificate"));
    CHECK(j["degree"].get<int>() == 2);
    CHECK(j["certificate"].size() == 3);
}
