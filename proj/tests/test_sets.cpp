#include "doctest.h"

#include <cmath>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "pluripot/errors.hpp"
#include "pluripot/sets.hpp"

using namespace pluripot;

TEST_CASE("set kind names round-trip") {
    for (const char* name : {"interval", "realdisk", "square", "simplex", "quarterpair",
                             "pacman", "convexk", "convexkprime"}) {
        const SetKind kind = set_kind_from_name(name);
        CHECK(std::string(set_kind_name(kind)) == name);
        const SetDescriptor d = SetDescriptor::named(name);
        CHECK(d.kind == kind);
    }
    CHECK_THROWS_AS(set_kind_from_name("klingon"), DescriptorError);
    CHECK_THROWS_AS(SetDescriptor::named("klingon"), DescriptorError);
}

TEST_CASE("membership of the model sets") {
    const SetDescriptor interval = SetDescriptor::named("interval");
    CHECK(interval.contains(0.5, 0.0));
    CHECK(interval.contains(-1.0, 0.0));
    CHECK_FALSE(interval.contains(1.5, 0.0));
    CHECK_FALSE(interval.contains(0.5, 0.1));

    const SetDescriptor disk = SetDescriptor::named("realdisk");
    CHECK(disk.contains(0.6, 0.8));
    CHECK_FALSE(disk.contains(0.8, 0.7));

    const SetDescriptor square = SetDescriptor::named("square");
    CHECK(square.contains(1.0, -1.0));
    CHECK_FALSE(square.contains(1.0 + 1e-6, 0.0));

    const SetDescriptor simplex = SetDescriptor::named("simplex");
    CHECK(simplex.contains(0.5, 0.5));
    CHECK(simplex.contains(0.0, 0.0));
    CHECK_FALSE(simplex.contains(0.6, 0.5));
    CHECK_FALSE(simplex.contains(-0.1, 0.2));

    const SetDescriptor qp = SetDescriptor::named("quarterpair");
    CHECK(qp.contains(0.5, 0.5));
    CHECK(qp.contains(-0.5, -0.5));
    CHECK_FALSE(qp.contains(0.5, -0.5));
    CHECK_FALSE(qp.contains(0.8, 0.8));
}

TEST_CASE("pacman membership near the vertex") {
    const SetDescriptor pac = SetDescriptor::named("pacman");
    CHECK(pac.contains(1.0, 0.0));   // vertex belongs to the closed set
    CHECK(pac.contains(0.5, 0.0));   // behind the vertex
    CHECK(pac.contains(1.0, 0.5));   // above the vertex, outside the wedge
    CHECK_FALSE(pac.contains(1.5, 0.0));  // on the wedge axis
    CHECK_FALSE(pac.contains(2.5, 0.0));  // outside the disk entirely
}

TEST_CASE("parabola-bounded image sets") {
    const SetDescriptor k = SetDescriptor::named("convexk");
    CHECK(k.contains(1.0, 0.25));
    CHECK(k.contains(0.5, 0.1));
    CHECK_FALSE(k.contains(1.0, 1.5));   // above t = 2s - s^2
    CHECK_FALSE(k.contains(0.5, -0.1));  // below t = 0

    const SetDescriptor kp = SetDescriptor::named("convexkprime");
    CHECK(kp.contains(1.0, 0.5));
    CHECK_FALSE(kp.contains(1.0, -0.1));   // below the lower parabola
    CHECK_FALSE(kp.contains(0.25, 0.25));  // below (s-1)^2 = 0.5625
}

TEST_CASE("descriptor JSON round-trip") {
    SetDescriptor d = SetDescriptor::named("pacman");
    d.alpha = 1.0;
    d.affine = Affine2::rotation(0.3, {0.5, -0.25});
    const nlohmann::json j = d.to_json();
    const SetDescriptor back = SetDescriptor::from_json(j);
    CHECK(back.kind == d.kind);
    CHECK(back.alpha == doctest::Approx(d.alpha).epsilon(1e-15));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            CHECK(back.affine.m[r][c] == doctest::Approx(d.affine.m[r][c]).epsilon(1e-15));
    CHECK(back.affine.shift[0] == doctest::Approx(d.affine.shift[0]).epsilon(1e-15));

    CHECK_THROWS_AS(SetDescriptor::from_json(nlohmann::json{{"kind", "nope"}}),
                    DescriptorError);
    CHECK_THROWS_AS(SetDescriptor::from_json(nlohmann::json::array()), DescriptorError);
}

TEST_CASE("affine inverse and singular rejection") {
    const Affine2 rot = Affine2::rotation(0.7, {1.0, 2.0});
    const Affine2 inv = rot.inverse();
    const auto p = rot.apply(0.3, -0.4);
    const auto back = inv.apply(p[0], p[1]);
    CHECK(back[0] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(back[1] == doctest::Approx(-0.4).epsilon(1e-14));

    Affine2 singular;
    singular.m = {{{1.0, 2.0}, {2.0, 4.0}}};
    CHECK_THROWS_AS(singular.inverse(), DescriptorError);
}

TEST_CASE("distance oracles") {
    CHECK(distance_to_set_r2(SetDescriptor::named("interval"), 2.0, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(distance_to_set_r2(SetDescriptor::named("realdisk"), 2.0, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(distance_to_set_r2(SetDescriptor::named("square"), 2.0, 2.0) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(distance_to_set_r2(SetDescriptor::named("simplex"), 1.0, 1.0) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(distance_to_set_r2(SetDescriptor::named("pacman"), 1.0, 2.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(distance_to_set_r2(SetDescriptor::named("interval"), 0.25, 0.0) == 0.0);

    const SetDescriptor disk = SetDescriptor::named("realdisk");
    const double d = distance_to_set_c2(disk, CPoint2{Complex(0.0, 0.3), Complex(0.0, 0.4)});
    CHECK(d == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("interior boundary distances of the image set") {
    // At (1, 0.25) the nearest boundary piece is the lower parabola point (1, 0).
    CHECK(dist_to_boundary_K(1.0, 0.25) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(vertical_dist_K(1.0, 0.25) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(vertical_dist_K(0.5, 0.5) == doctest::Approx(0.5 - 0.25).epsilon(1e-12));
    CHECK_THROWS_AS(dist_to_boundary_K(1.0, 5.0), DomainError);
    CHECK_THROWS_AS(vertical_dist_K(2.0, 0.5), DomainError);
}

TEST_CASE("meshes stay on the set and respect the spacing rule") {
    for (const char* name : {"interval", "simplex", "pacman", "convexk"}) {
        const SetDescriptor set = SetDescriptor::named(name);
        Mesh mesh = build_mesh(set, 4);
        CHECK(mesh.points.size() > 0);
        CHECK(mesh.points.size() < kMeshCap);
        CHECK(mesh.nx.size() == mesh.points.size());
        for (const auto& p : mesh.points) {
            CHECK(set.contains(p[0], p[1]));
        }
        for (std::size_t i = 0; i < mesh.points.size(); ++i) {
            CHECK(std::fabs(mesh.nx[i]) <= 1.0 + 1e-9);
            CHECK(std::fabs(mesh.ny[i]) <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("mesh construction is deterministic") {
    const SetDescriptor set = SetDescriptor::named("quarterpair");
    const Mesh a = build_mesh(set, 6);
    const Mesh b = build_mesh(set, 6);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i][0] == b.points[i][0]);
        CHECK(a.points[i][1] == b.points[i][1]);
    }
}
