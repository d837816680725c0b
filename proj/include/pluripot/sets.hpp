#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pluripot/complex_analysis.hpp"

namespace pluripot {

inline constexpr double kMembershipTol = 1e-12;
inline constexpr double kMeshC0 = 0.5;          // admissible-mesh spacing constant c0/n^2
inline constexpr std::size_t kMeshCap = 400000;  // hard cardinality cap for build_mesh

enum class SetKind {
    interval,      // [-1,1] on the real axis (1D)
    realdisk,      // closed unit disk of R^2
    square,        // [-1,1]^2
    simplex,       // standard simplex {x,y >= 0, x+y <= 1}
    quarterpair,   // {x^2+y^2 <= 1, xy >= 0} (two quarter disks)
    pacman,        // disk((1,0),1) minus the open wedge of opening alpha at (1,0)
    convexk,       // image of pacman under (x,y) -> (x,y^2); bounded by t=0, t=(s-1)^2, t=2s-s^2
    convexkprime,  // {(s-1)^2 <= t <= 2s-s^2}
};

const char* set_kind_name(SetKind kind);
SetKind set_kind_from_name(const std::string& name);  // throws DescriptorError

// Real affine map x -> M x + shift of R^2; acts on C^2 coordinatewise.
struct Affine2 {
    std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};
    std::array<double, 2> shift{0.0, 0.0};

    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    bool is_identity() const;
    Affine2 inverse() const;  // throws DescriptorError when |det| <= 1e-12
    std::array<double, 2> apply(double x, double y) const;
    CPoint2 apply(const CPoint2& z) const;
    // Largest / smallest singular value (used to rescale mesh spacing).
    double sigma_max() const;
    double sigma_min() const;

    static Affine2 rotation(double theta, std::array<double, 2> shift);
};

struct SetDescriptor {
    SetKind kind = SetKind::interval;
    double alpha = 1.5707963267948966;  // pacman opening angle, default pi/2
    Affine2 affine;

    static SetDescriptor named(const std::string& name);  // bare model set
    void validate() const;                                // throws DescriptorError

    int dim() const { return kind == SetKind::interval ? 1 : 2; }
    bool has_closed_form() const;

    // Exact membership of the real point (x,y), tolerance kMembershipTol on
    // every defining inequality (after pulling back through the affine map).
    bool contains(double x, double y) const;

    nlohmann::json to_json() const;
    static SetDescriptor from_json(const nlohmann::json& j);  // throws DescriptorError
};

// Euclidean distance from a real point to the set (0 inside).  Exact for the
// model interval/realdisk/square/simplex/quarterpair/pacman and for affine
// images by orthogonal maps; a sigma_min lower bound is returned for general
// affine images.  Unsupported kinds throw DomainError.
double distance_to_set_r2(const SetDescriptor& set, double x, double y);

// Distance from an arbitrary C^2 point to the (real) set, using
// dist^2 = y1^2 + y2^2 + distance_to_set_r2(x1,x2)^2.
double distance_to_set_c2(const SetDescriptor& set, const CPoint2& z);

// Distance from an interior point of convexk to its boundary (three arcs:
// the segment t=0 for 0<=s<=1 and the parabolas t=(s-1)^2, t=2s-s^2).
// Throws DomainError if the point is outside the set.
double dist_to_boundary_K(double s, double t);

// Vertical distance t - (s-1)^2 above the lower parabola; throws DomainError
// if t <= (s-1)^2.
double vertical_dist_K(double s, double t);

// Coordinate normalization attached to a mesh: LP work happens in
// u = (A^{-1}(x) - center) / halfwidth, which keeps monomials conditioned.
struct CoordMap {
    Affine2 inv;  // original -> model coordinates
    std::array<double, 2> center{0.0, 0.0};
    std::array<double, 2> halfwidth{1.0, 1.0};

    std::array<double, 2> normalize(double x, double y) const;
};

struct Mesh {
    std::vector<std::array<double, 2>> points;  // original coordinates
    int dim = 2;
    int degree_hint = 1;
    double spacing = 0.0;  // measured max nearest-neighbour gap bound used in construction
    CoordMap map;

    // Cached normalized coordinates, filled by build_mesh / ensure_normalized.
    std::vector<double> nx, ny;
    void ensure_normalized();
};

// Deterministic admissible-style mesh: interior grid at spacing kMeshC0/n^2,
// boundary arcs with Chebyshev-warped sampling, quadratically graded inward
// boundary layers, plus all corner points.  Throws DomainError when the
// cardinality cap is exceeded.
Mesh build_mesh(const SetDescriptor& set, int degree);

}  // namespace pluripot
