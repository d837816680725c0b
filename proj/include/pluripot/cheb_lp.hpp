#pragma once

#include <array>
#include <vector>

#include <nlohmann/json.hpp>

#include "pluripot/lattice.hpp"
#include "pluripot/sets.hpp"

namespace pluripot {

struct LPBound {
    double value = 0.0;  // (1/n) log of the optimal |p(z0)|
    int degree = 0;
    int mesh_size = 0;
    // Monomial coefficients in the mesh's normalized coordinates, indexed by
    // `exponents` (the lattice enumeration order).
    std::vector<double> certificate;
    std::vector<std::array<int, 2>> exponents;

    // Diagnostics, not serialized.
    int iterations = 0;
    double mesh_max_abs = 0.0;

    nlohmann::json to_json() const;  // {"value","degree","mesh_size","certificate"}
};

// Maximize p(z0) over real-coefficient p in Poly(nC) subject to |p| <= 1 on
// the mesh; returns (1/n) log of the certified-feasible optimum.  Solved as a
// dense revised simplex on the dual; throws LPError on numerical failure.
LPBound lp_lower_bound_on_mesh(const Mesh& mesh, const LatticeSpec& lattice, int n,
                               std::array<double, 2> z0);

// Convenience wrapper building the mesh at degree hint n.
LPBound lp_lower_bound(const SetDescriptor& set, const LatticeSpec& lattice, int n,
                       std::array<double, 2> z0);

// Bounds over an increasing list of degrees (each a multiple of the smallest),
// sharing one mesh built at the largest degree so that squaring a degree-n
// optimum stays feasible at degree 2n.
std::vector<LPBound> degree_sweep(const SetDescriptor& set, const LatticeSpec& lattice,
                                  std::array<double, 2> z0, const std::vector<int>& degrees);

// Certificate replay against a mesh: max |p| over the mesh points.
double replay_mesh_max(const Mesh& mesh, const LPBound& bound);

// Certificate replay at a point: (1/degree) log |p(z0)|.
double replay_value(const Mesh& mesh, const LPBound& bound, std::array<double, 2> z0);

}  // namespace pluripot
