#pragma once

#include <array>
#include <utility>

#include "pluripot/cheb_lp.hpp"
#include "pluripot/sets.hpp"

namespace pluripot {

// A model-set mesh together with its exact forward image under
// (x,y) -> (x,y^2), so LP bounds on both sides share the same point data and
// composing a certificate with the map never leaves the image mesh.
struct MatchedMeshes {
    Mesh model;
    Mesh image;
};

// model = pacman(pi/2) at the given degree hint, image = the parabola-bounded
// convex set it maps onto.
MatchedMeshes make_matched_pacman_meshes(int model_hint);

// model = the rotated quarter-pair (disk sectors |y| >= |x-1|), image = the
// convex set between the two parabolas.
MatchedMeshes make_matched_pprime_meshes(int model_hint);

// lhs = LP bound with exponents in n*co{(0,0),(2,0),(0,1)} on the image mesh
// at (x, y^2); rhs = 2 * LP bound with total degree 2n on the model mesh at
// (x, y).  Both estimate quantities that agree in the degree limit.
std::pair<double, double> lattice_pullback_check(const MatchedMeshes& meshes, int n,
                                                 std::array<double, 2> z);

// Convenience form building matched meshes at hint 8.
std::pair<double, double> lattice_pullback_check(int n, const CPoint2& z);

}  // namespace pluripot
