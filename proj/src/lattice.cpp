#include "pluripot/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pluripot/errors.hpp"

namespace pluripot {

namespace {

constexpr double kHullTol = 1e-9;

// Counterclockwise hull order around the centroid (inputs are few vertices).
std::vector<std::array<double, 2>> hull_ordered(std::vector<std::array<double, 2>> v) {
    double cx = 0.0, cy = 0.0;
    for (const auto& p : v) {
        cx += p[0];
        cy += p[1];
    }
    cx /= static_cast<double>(v.size());
    cy /= static_cast<double>(v.size());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
        const double aa = std::atan2(a[1] - cy, a[0] - cx);
        const double ab = std::atan2(b[1] - cy, b[0] - cx);
        if (aa != ab) return aa < ab;
        return a < b;
    });
    return v;
}

bool in_scaled_hull(const std::vector<std::array<double, 2>>& ordered, double scale, double x,
                    double y) {
    const std::size_t n = ordered.size();
    if (n == 1)
        return std::abs(x - scale * ordered[0][0]) <= kHullTol &&
               std::abs(y - scale * ordered[0][1]) <= kHullTol;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = ordered[i];
        const auto& q = ordered[(i + 1) % n];
        const double px = scale * p[0], py = scale * p[1];
        const double qx = scale * q[0], qy = scale * q[1];
        const double cross = (qx - px) * (y - py) - (qy - py) * (x - px);
        if (cross < -kHullTol * std::max(1.0, scale)) return false;
    }
    return true;
}

}  // namespace

LatticeSpec LatticeSpec::simplex() {
    LatticeSpec c;
    c.vertices = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    c.dim = 2;
    return c;
}

LatticeSpec LatticeSpec::pac_hull() {
    LatticeSpec c;
    c.vertices = {{0.0, 0.0}, {2.0, 0.0}, {0.0, 1.0}};
    c.dim = 2;
    return c;
}

LatticeSpec LatticeSpec::interval_1d() {
    LatticeSpec c;
    c.vertices = {{0.0, 0.0}, {1.0, 0.0}};
    c.dim = 1;
    return c;
}

void LatticeSpec::validate() const {
    if (vertices.empty()) throw DescriptorError("LatticeSpec: no vertices");
    for (const auto& v : vertices)
        if (v[0] < -kHullTol || v[1] < -kHullTol)
            throw DescriptorError("LatticeSpec: vertices must lie in the positive quadrant");
    if (dim != 1 && dim != 2) throw DescriptorError("LatticeSpec: dim must be 1 or 2");
    containment_scale();
}

int LatticeSpec::containment_scale() const {
    const auto ordered = hull_ordered(vertices);
    const std::vector<std::array<double, 2>> simplex_vertices =
        dim == 1 ? std::vector<std::array<double, 2>>{{0.0, 0.0}, {1.0, 0.0}}
                 : std::vector<std::array<double, 2>>{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    for (int k = 1; k <= 8; ++k) {
        bool ok = true;
        for (const auto& v : simplex_vertices)
            if (!in_scaled_hull(ordered, static_cast<double>(k), v[0], v[1])) ok = false;
        if (ok) return k;
    }
    throw DescriptorError("LatticeSpec: standard simplex not contained in kC for any k <= 8");
}

std::vector<std::array<int, 2>> LatticeSpec::enumerate(int n) const {
    if (n < 1) throw DomainError("LatticeSpec::enumerate: n must be >= 1");
    const auto ordered = hull_ordered(vertices);
    double max_j = 0.0, max_k = 0.0;
    for (const auto& v : vertices) {
        max_j = std::max(max_j, v[0]);
        max_k = std::max(max_k, v[1]);
    }
    const int jmax = static_cast<int>(std::floor(max_j * n + kHullTol));
    const int kmax = dim == 1 ? 0 : static_cast<int>(std::floor(max_k * n + kHullTol));
    std::vector<std::array<int, 2>> out;
    for (int j = 0; j <= jmax; ++j)
        for (int k = 0; k <= kmax; ++k)
            if (in_scaled_hull(ordered, static_cast<double>(n), static_cast<double>(j),
                               static_cast<double>(k)))
                out.push_back({j, k});
    std::sort(out.begin(), out.end());
    return out;
}

double h_indicator(const LatticeSpec& C, const CPoint2& z) {
    const double a1 = std::abs(z.z1);
    const double a2 = std::abs(z.z2);
    double sup = -std::numeric_limits<double>::infinity();
    for (const auto& v : C.vertices) {
        double val = 0.0;
        bool finite = true;
        if (v[0] != 0.0) {
            if (a1 == 0.0)
                finite = false;
            else
                val += v[0] * std::log(a1);
        }
        if (finite && v[1] != 0.0) {
            if (a2 == 0.0)
                finite = false;
            else
                val += v[1] * std::log(a2);
        }
        if (finite) sup = std::max(sup, val);
    }
    return sup;
}

}  // namespace pluripot
