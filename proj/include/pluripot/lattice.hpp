#pragma once

#include <array>
#include <vector>

#include "pluripot/complex_analysis.hpp"

namespace pluripot {

// Convex exponent body C in the closed positive quadrant, given by vertices.
// The standard simplex must sit inside kC for some integer k <= 8.
struct LatticeSpec {
    std::vector<std::array<double, 2>> vertices;
    int dim = 2;

    static LatticeSpec simplex();      // co{(0,0),(1,0),(0,1)}
    static LatticeSpec pac_hull();     // co{(0,0),(2,0),(0,1)}
    static LatticeSpec interval_1d();  // [0,1] exponent segment (1D problems)

    void validate() const;  // throws DescriptorError

    // Smallest integer k <= 8 with the standard simplex inside kC;
    // throws DescriptorError when no such k exists.
    int containment_scale() const;

    // nC intersected with the integer lattice of the closed positive
    // quadrant, sorted lexicographically.
    std::vector<std::array<int, 2>> enumerate(int n) const;
};

// Logarithmic indicator sup over the vertices of C of j log|z1| + k log|z2|;
// a zero exponent contributes 0 regardless of the coordinate modulus.
double h_indicator(const LatticeSpec& C, const CPoint2& z);

}  // namespace pluripot
