#include "pluripot/pullback.hpp"

#include <algorithm>
#include <cmath>

#include "pluripot/errors.hpp"

namespace pluripot {

namespace {

// Forward image of a model mesh under (x,y) -> (x,y^2).  (x,y) and (x,-y)
// produce bitwise-equal images, so exact dedup halves symmetric meshes.
Mesh image_mesh(const Mesh& model, int image_hint) {
    Mesh img;
    img.dim = 2;
    img.degree_hint = image_hint;
    img.spacing = 2.0 * model.spacing;
    img.points.reserve(model.points.size());
    for (const auto& p : model.points) img.points.push_back({p[0], p[1] * p[1]});
    std::sort(img.points.begin(), img.points.end());
    img.points.erase(std::unique(img.points.begin(), img.points.end()), img.points.end());

    double lo0 = img.points.front()[0], hi0 = lo0, lo1 = img.points.front()[1], hi1 = lo1;
    for (const auto& p : img.points) {
        lo0 = std::min(lo0, p[0]);
        hi0 = std::max(hi0, p[0]);
        lo1 = std::min(lo1, p[1]);
        hi1 = std::max(hi1, p[1]);
    }
    img.map.center = {(lo0 + hi0) / 2, (lo1 + hi1) / 2};
    img.map.halfwidth = {std::max((hi0 - lo0) / 2, 1e-9), std::max((hi1 - lo1) / 2, 1e-9)};
    img.ensure_normalized();
    return img;
}

int halved_hint(int model_hint) {
    // Spacing doubles under the square map, so the defensible admissibility
    // hint shrinks by sqrt(2).
    return std::max(1, static_cast<int>(std::floor(static_cast<double>(model_hint) /
                                                   std::sqrt(2.0))));
}

}  // namespace

MatchedMeshes make_matched_pacman_meshes(int model_hint) {
    MatchedMeshes mm;
    mm.model = build_mesh(SetDescriptor::named("pacman"), model_hint);
    mm.image = image_mesh(mm.model, halved_hint(model_hint));
    return mm;
}

MatchedMeshes make_matched_pprime_meshes(int model_hint) {
    SetDescriptor pprime;
    pprime.kind = SetKind::quarterpair;
    pprime.affine = Affine2::rotation(0.7853981633974483, {1.0, 0.0});
    MatchedMeshes mm;
    mm.model = build_mesh(pprime, model_hint);
    mm.image = image_mesh(mm.model, halved_hint(model_hint));
    return mm;
}

std::pair<double, double> lattice_pullback_check(const MatchedMeshes& meshes, int n,
                                                 std::array<double, 2> z) {
    if (n < 1 || n > 16) throw DomainError("lattice_pullback_check: n must lie in [1, 16]");
    const std::array<double, 2> fz{z[0], z[1] * z[1]};
    const LPBound lhs = lp_lower_bound_on_mesh(meshes.image, LatticeSpec::pac_hull(), n, fz);
    const LPBound rhs = lp_lower_bound_on_mesh(meshes.model, LatticeSpec::simplex(), 2 * n, z);
    return {lhs.value, 2.0 * rhs.value};
}

std::pair<double, double> lattice_pullback_check(int n, const CPoint2& z) {
    if (z.z1.imag() != 0.0 || z.z2.imag() != 0.0)
        throw DomainError("lattice_pullback_check: z must be real");
    const MatchedMeshes meshes = make_matched_pprime_meshes(8);
    return lattice_pullback_check(meshes, n, {z.z1.real(), z.z2.real()});
}

}  // namespace pluripot
