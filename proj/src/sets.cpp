#include "pluripot/sets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <nlohmann/json.hpp>

#include "pluripot/errors.hpp"

namespace pluripot {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

double sq(double x) { return x * x; }

}  // namespace

const char* set_kind_name(SetKind kind) {
    switch (kind) {
        case SetKind::interval: return "interval";
        case SetKind::realdisk: return "realdisk";
        case SetKind::square: return "square";
        case SetKind::simplex: return "simplex";
        case SetKind::quarterpair: return "quarterpair";
        case SetKind::pacman: return "pacman";
        case SetKind::convexk: return "convexk";
        case SetKind::convexkprime: return "convexkprime";
    }
    return "?";
}

SetKind set_kind_from_name(const std::string& name) {
    std::string s;
    s.reserve(name.size());
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "interval") return SetKind::interval;
    if (s == "realdisk" || s == "disk") return SetKind::realdisk;
    if (s == "square") return SetKind::square;
    if (s == "simplex") return SetKind::simplex;
    if (s == "quarterpair") return SetKind::quarterpair;
    if (s == "pacman") return SetKind::pacman;
    if (s == "convexk") return SetKind::convexk;
    if (s == "convexkprime") return SetKind::convexkprime;
    throw DescriptorError("unknown set kind: " + name);
}

// ---------------------------------------------------------------------------
// Affine2

bool Affine2::is_identity() const {
    return m[0][0] == 1.0 && m[0][1] == 0.0 && m[1][0] == 0.0 && m[1][1] == 1.0 &&
           shift[0] == 0.0 && shift[1] == 0.0;
}

Affine2 Affine2::inverse() const {
    const double d = det();
    if (std::abs(d) <= 1e-12) throw DescriptorError("affine transform is not invertible");
    Affine2 r;
    r.m[0][0] = m[1][1] / d;
    r.m[0][1] = -m[0][1] / d;
    r.m[1][0] = -m[1][0] / d;
    r.m[1][1] = m[0][0] / d;
    r.shift[0] = -(r.m[0][0] * shift[0] + r.m[0][1] * shift[1]);
    r.shift[1] = -(r.m[1][0] * shift[0] + r.m[1][1] * shift[1]);
    return r;
}

std::array<double, 2> Affine2::apply(double x, double y) const {
    return {m[0][0] * x + m[0][1] * y + shift[0], m[1][0] * x + m[1][1] * y + shift[1]};
}

CPoint2 Affine2::apply(const CPoint2& z) const {
    return CPoint2{m[0][0] * z.z1 + m[0][1] * z.z2 + shift[0],
                   m[1][0] * z.z1 + m[1][1] * z.z2 + shift[1]};
}

double Affine2::sigma_max() const {
    const double e = (m[0][0] + m[1][1]) / 2, f = (m[0][0] - m[1][1]) / 2;
    const double g = (m[1][0] + m[0][1]) / 2, h = (m[1][0] - m[0][1]) / 2;
    return std::hypot(e, h) + std::hypot(f, g);
}

double Affine2::sigma_min() const {
    const double e = (m[0][0] + m[1][1]) / 2, f = (m[0][0] - m[1][1]) / 2;
    const double g = (m[1][0] + m[0][1]) / 2, h = (m[1][0] - m[0][1]) / 2;
    return std::abs(std::hypot(e, h) - std::hypot(f, g));
}

Affine2 Affine2::rotation(double theta, std::array<double, 2> shift) {
    Affine2 r;
    const double c = std::cos(theta), s = std::sin(theta);
    r.m = {{{c, -s}, {s, c}}};
    r.shift = shift;
    return r;
}

// ---------------------------------------------------------------------------
// SetDescriptor

SetDescriptor SetDescriptor::named(const std::string& name) {
    SetDescriptor d;
    d.kind = set_kind_from_name(name);
    return d;
}

void SetDescriptor::validate() const {
    if (kind == SetKind::pacman && !(alpha > 0.0 && alpha < kPi))
        throw DescriptorError("pacman angle must satisfy 0 < alpha < pi");
    if (std::abs(affine.det()) <= 1e-12)
        throw DescriptorError("affine transform is not invertible");
}

bool SetDescriptor::has_closed_form() const {
    switch (kind) {
        case SetKind::interval:
        case SetKind::realdisk:
        case SetKind::square:
        case SetKind::simplex:
        case SetKind::quarterpair:
            return true;
        default:
            return false;
    }
}

namespace {

bool model_contains(SetKind kind, double alpha, double x, double y) {
    const double tol = kMembershipTol;
    switch (kind) {
        case SetKind::interval:
            return std::abs(x) <= 1.0 + tol && std::abs(y) <= tol;
        case SetKind::realdisk:
            return x * x + y * y <= 1.0 + tol;
        case SetKind::square:
            return std::abs(x) <= 1.0 + tol && std::abs(y) <= 1.0 + tol;
        case SetKind::simplex:
            return x >= -tol && y >= -tol && x + y <= 1.0 + tol;
        case SetKind::quarterpair:
            return x * x + y * y <= 1.0 + tol && x * y >= -tol;
        case SetKind::pacman: {
            const double dx = x - 1.0;
            if (dx * dx + y * y > 1.0 + tol) return false;
            // The wedge is open, so the vertex and the wedge edges belong to the set.
            const double tb = std::tan(alpha / 2);
            return !(dx > tol && std::abs(y) < tb * dx - tol);
        }
        case SetKind::convexk: {
            if (y < -tol || y > 2.0 * x - x * x + tol) return false;
            return x <= 1.0 || y >= sq(x - 1.0) - tol;
        }
        case SetKind::convexkprime:
            return y >= sq(x - 1.0) - tol && y <= 2.0 * x - x * x + tol;
    }
    return false;
}

}  // namespace

bool SetDescriptor::contains(double x, double y) const {
    if (affine.is_identity()) return model_contains(kind, alpha, x, y);
    const auto p = affine.inverse().apply(x, y);
    return model_contains(kind, alpha, p[0], p[1]);
}

nlohmann::json SetDescriptor::to_json() const {
    nlohmann::json j;
    j["kind"] = set_kind_name(kind);
    if (kind == SetKind::pacman) j["alpha"] = alpha;
    if (!affine.is_identity()) {
        j["affine"] = {{affine.m[0][0], affine.m[0][1]},
                       {affine.m[1][0], affine.m[1][1]},
                       {affine.shift[0], affine.shift[1]}};
    }
    return j;
}

SetDescriptor SetDescriptor::from_json(const nlohmann::json& j) {
    SetDescriptor d;
    try {
        d.kind = set_kind_from_name(j.at("kind").get<std::string>());
        if (j.contains("alpha")) d.alpha = j.at("alpha").get<double>();
        if (j.contains("affine")) {
            const auto& a = j.at("affine");
            if (!a.is_array() || a.size() != 3 || a[0].size() != 2 || a[1].size() != 2 ||
                a[2].size() != 2)
                throw DescriptorError("affine must be [[a,b],[c,d],[e,f]]");
            d.affine.m = {{{a[0][0].get<double>(), a[0][1].get<double>()},
                           {a[1][0].get<double>(), a[1][1].get<double>()}}};
            d.affine.shift = {a[2][0].get<double>(), a[2][1].get<double>()};
        }
    } catch (const nlohmann::json::exception& e) {
        throw DescriptorError(std::string("malformed set descriptor: ") + e.what());
    }
    d.validate();
    return d;
}

// ---------------------------------------------------------------------------
// Distance primitives

namespace {

double dist_segment(double px, double py, double ax, double ay, double bx, double by) {
    const double vx = bx - ax, vy = by - ay;
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0 ? ((px - ax) * vx + (py - ay) * vy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(px - (ax + t * vx), py - (ay + t * vy));
}

// Circle arc of radius r around (cx,cy), angles [ta,tb] within [0,2pi].
double dist_circle_arc(double px, double py, double cx, double cy, double r, double ta,
                       double tb) {
    const double dx = px - cx, dy = py - cy;
    double phi = std::atan2(dy, dx);
    if (phi < 0) phi += 2 * kPi;
    if (phi >= ta && phi <= tb) return std::abs(std::hypot(dx, dy) - r);
    const double d1 = std::hypot(px - (cx + r * std::cos(ta)), py - (cy + r * std::sin(ta)));
    const double d2 = std::hypot(px - (cx + r * std::cos(tb)), py - (cy + r * std::sin(tb)));
    return std::min(d1, d2);
}

// Distance to the parabola arcs of convexk / convexkprime, in the offset
// coordinate u = sigma - 1.  lower: t = u^2; upper: t = 1 - u^2.  The query
// point is (s,t) with su = s - 1.  Coarse scan + golden-section refinement of
// the best basin, always keeping the minimum over every evaluated candidate;
// the u = su candidate realizes the vertical gap exactly, which keeps the
// result meaningful even when the point sits within rounding distance of the
// arc and the refined basin bottoms out at floating-point granularity.
template <bool Upper>
double parabola_arc_dist(double su, double t, double ua, double ub) {
    auto fval = [&](double u) {
        const double g = Upper ? (t - 1.0) + u * u : t - u * u;
        const double d = su - u;
        return d * d + g * g;
    };

    double best_u = ua, best_f = fval(ua);
    auto consider = [&](double u) {
        if (u < ua || u > ub) return;
        const double f = fval(u);
        if (f < best_f) {
            best_f = f;
            best_u = u;
        }
    };
    consider(ub);
    const int kScan = 64;
    for (int i = 1; i < kScan; ++i) consider(ua + (ub - ua) * i / kScan);
    consider(std::clamp(su, ua, ub));

    double a = std::max(ua, best_u - (ub - ua) / kScan);
    double b = std::min(ub, best_u + (ub - ua) / kScan);
    const double r = 0.6180339887498949;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double f1 = fval(x1), f2 = fval(x2);
    for (int it = 0; it < 100 && b - a > 1e-17 * (1.0 + std::abs(a)); ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = fval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = fval(x2);
        }
    }
    consider(x1);
    consider(x2);
    consider(0.5 * (a + b));
    return std::sqrt(best_f);
}

double pacman_dist(double alpha, double px, double py) {
    if (model_contains(SetKind::pacman, alpha, px, py)) return 0.0;
    const double b = alpha / 2;
    double d = dist_circle_arc(px, py, 1.0, 0.0, 1.0, b, 2 * kPi - b);
    d = std::min(d, dist_segment(px, py, 1.0, 0.0, 1.0 + std::cos(b), std::sin(b)));
    d = std::min(d, dist_segment(px, py, 1.0, 0.0, 1.0 + std::cos(b), -std::sin(b)));
    return d;
}

// Exact projection distance onto the first-quadrant quarter disk.
double quarter_disk_dist(double px, double py) {
    const double qx = std::max(0.0, px), qy = std::max(0.0, py);
    const double r = std::hypot(qx, qy);
    if (r <= 1.0) return std::hypot(px - qx, py - qy);
    return std::hypot(px - qx / r, py - qy / r);
}

double model_dist(SetKind kind, double alpha, double x, double y) {
    switch (kind) {
        case SetKind::interval:
            return std::hypot(std::max(0.0, std::abs(x) - 1.0), y);
        case SetKind::realdisk:
            return std::max(0.0, std::hypot(x, y) - 1.0);
        case SetKind::square:
            return std::hypot(std::max(0.0, std::abs(x) - 1.0), std::max(0.0, std::abs(y) - 1.0));
        case SetKind::simplex: {
            if (model_contains(kind, alpha, x, y)) return 0.0;
            double d = dist_segment(x, y, 0, 0, 1, 0);
            d = std::min(d, dist_segment(x, y, 0, 0, 0, 1));
            d = std::min(d, dist_segment(x, y, 1, 0, 0, 1));
            return d;
        }
        case SetKind::quarterpair:
            return std::min(quarter_disk_dist(x, y), quarter_disk_dist(-x, -y));
        case SetKind::pacman:
            return pacman_dist(alpha, x, y);
        default:
            throw DomainError(std::string("distance_to_set_r2: unsupported kind ") +
                              set_kind_name(kind));
    }
}

}  // namespace

double distance_to_set_r2(const SetDescriptor& set, double x, double y) {
    if (set.affine.is_identity()) return model_dist(set.kind, set.alpha, x, y);
    const auto p = set.affine.inverse().apply(x, y);
    const double d = model_dist(set.kind, set.alpha, p[0], p[1]);
    const double smax = set.affine.sigma_max(), smin = set.affine.sigma_min();
    // Exact for similarity transforms; a lower bound otherwise.
    if (smax - smin <= 1e-12 * smax) return d * smax;
    return d * smin;
}

double distance_to_set_c2(const SetDescriptor& set, const CPoint2& z) {
    const double dr = distance_to_set_r2(set, z.z1.real(), z.z2.real());
    return std::sqrt(sq(z.z1.imag()) + sq(z.z2.imag()) + sq(dr));
}

double dist_to_boundary_K(double s, double t) {
    if (!model_contains(SetKind::convexk, 0.0, s, t))
        throw DomainError("dist_to_boundary_K: point outside convexk");
    const double su = s - 1.0;
    double d = dist_segment(s, t, 0, 0, 1, 0);
    d = std::min(d, parabola_arc_dist<false>(su, t, 0.0, kInvSqrt2));
    d = std::min(d, parabola_arc_dist<true>(su, t, -1.0, kInvSqrt2));
    return d;
}

double vertical_dist_K(double s, double t) {
    const double w = s - 1.0;
    const double v = t - w * w;
    if (v <= 0.0) throw DomainError("vertical_dist_K: point not above the lower parabola");
    return v;
}

// ---------------------------------------------------------------------------
// Meshes

std::array<double, 2> CoordMap::normalize(double x, double y) const {
    const auto p = inv.apply(x, y);
    return {(p[0] - center[0]) / halfwidth[0], (p[1] - center[1]) / halfwidth[1]};
}

void Mesh::ensure_normalized() {
    if (nx.size() == points.size()) return;
    nx.resize(points.size());
    ny.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto u = map.normalize(points[i][0], points[i][1]);
        nx[i] = u[0];
        ny[i] = u[1];
    }
}

namespace {

struct BoundaryArc {
    std::function<std::array<double, 2>(double)> gamma;
    double a = 0.0, b = 1.0;
    bool closed = false;
};

struct ModelGeometry {
    std::array<double, 2> lo, hi;  // bounding box
    std::vector<BoundaryArc> arcs;
    std::vector<std::array<double, 2>> corners;
};

ModelGeometry model_geometry(SetKind kind, double alpha) {
    ModelGeometry g;
    auto seg = [](std::array<double, 2> p, std::array<double, 2> q) {
        return BoundaryArc{[p, q](double u) {
                               return std::array<double, 2>{p[0] + u * (q[0] - p[0]),
                                                            p[1] + u * (q[1] - p[1])};
                           },
                           0.0, 1.0, false};
    };
    switch (kind) {
        case SetKind::realdisk:
            g.lo = {-1, -1};
            g.hi = {1, 1};
            g.arcs.push_back({[](double t) {
                                  return std::array<double, 2>{std::cos(t), std::sin(t)};
                              },
                              0.0, 2 * kPi, true});
            break;
        case SetKind::square:
            g.lo = {-1, -1};
            g.hi = {1, 1};
            g.arcs = {seg({-1, -1}, {1, -1}), seg({1, -1}, {1, 1}), seg({1, 1}, {-1, 1}),
                      seg({-1, 1}, {-1, -1})};
            g.corners = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
            break;
        case SetKind::simplex:
            g.lo = {0, 0};
            g.hi = {1, 1};
            g.arcs = {seg({0, 0}, {1, 0}), seg({1, 0}, {0, 1}), seg({0, 1}, {0, 0})};
            g.corners = {{0, 0}, {1, 0}, {0, 1}};
            break;
        case SetKind::quarterpair:
            g.lo = {-1, -1};
            g.hi = {1, 1};
            g.arcs.push_back({[](double t) {
                                  return std::array<double, 2>{std::cos(t), std::sin(t)};
                              },
                              0.0, kPi / 2, false});
            g.arcs.push_back({[](double t) {
                                  return std::array<double, 2>{std::cos(t), std::sin(t)};
                              },
                              kPi, 3 * kPi / 2, false});
            g.arcs.push_back(seg({0, 0}, {1, 0}));
            g.arcs.push_back(seg({0, 0}, {0, 1}));
            g.arcs.push_back(seg({0, 0}, {-1, 0}));
            g.arcs.push_back(seg({0, 0}, {0, -1}));
            g.corners = {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            break;
        case SetKind::pacman: {
            const double b = alpha / 2;
            g.lo = {0, -1};
            g.hi = {2, 1};
            g.arcs.push_back({[](double t) {
                                  return std::array<double, 2>{1 + std::cos(t), std::sin(t)};
                              },
                              b, 2 * kPi - b, false});
            g.arcs.push_back(seg({1, 0}, {1 + std::cos(b), std::sin(b)}));
            g.arcs.push_back(seg({1, 0}, {1 + std::cos(b), -std::sin(b)}));
            g.corners = {{1, 0}, {1 + std::cos(b), std::sin(b)}, {1 + std::cos(b), -std::sin(b)}};
            break;
        }
        case SetKind::convexk:
            g.lo = {0, 0};
            g.hi = {1 + kInvSqrt2, 1};
            g.arcs.push_back(seg({0, 0}, {1, 0}));
            g.arcs.push_back({[](double u) {
                                  return std::array<double, 2>{1 + u, u * u};
                              },
                              0.0, kInvSqrt2, false});
            g.arcs.push_back({[](double s) {
                                  return std::array<double, 2>{s, 2 * s - s * s};
                              },
                              0.0, 1 + kInvSqrt2, false});
            g.corners = {{0, 0}, {1, 0}, {1 + kInvSqrt2, 0.5}};
            break;
        case SetKind::convexkprime:
            g.lo = {1 - kInvSqrt2, 0};
            g.hi = {1 + kInvSqrt2, 1};
            g.arcs.push_back({[](double u) {
                                  return std::array<double, 2>{1 + u, u * u};
                              },
                              -kInvSqrt2, kInvSqrt2, false});
            g.arcs.push_back({[](double s) {
                                  return std::array<double, 2>{s, 2 * s - s * s};
                              },
                              1 - kInvSqrt2, 1 + kInvSqrt2, false});
            g.corners = {{1 - kInvSqrt2, 0.5}, {1 + kInvSqrt2, 0.5}};
            break;
        default:
            throw DomainError("model_geometry: 1D set");
    }
    return g;
}

double arc_length_estimate(const BoundaryArc& arc) {
    const int n = 128;
    double len = 0.0;
    auto prev = arc.gamma(arc.a);
    for (int i = 1; i <= n; ++i) {
        const auto cur = arc.gamma(arc.a + (arc.b - arc.a) * i / n);
        len += std::hypot(cur[0] - prev[0], cur[1] - prev[1]);
        prev = cur;
    }
    return len;
}

Mesh build_interval_mesh(const SetDescriptor& set, int degree) {
    Mesh mesh;
    mesh.dim = 1;
    mesh.degree_hint = degree;
    mesh.map.inv = set.affine.inverse();
    const std::size_t m = std::max<std::size_t>(8ull * degree * degree, 4096);
    mesh.points.reserve(m + 1);
    double prev = -1.0, max_gap = 0.0;
    for (std::size_t j = 0; j <= m; ++j) {
        const double x = -std::cos(kPi * static_cast<double>(j) / static_cast<double>(m));
        const auto p = set.affine.apply(x, 0.0);
        mesh.points.push_back({p[0], p[1]});
        if (j > 0) max_gap = std::max(max_gap, x - prev);
        prev = x;
    }
    mesh.spacing = max_gap * set.affine.sigma_max();
    mesh.ensure_normalized();
    return mesh;
}

}  // namespace

Mesh build_mesh(const SetDescriptor& set, int degree) {
    set.validate();
    if (degree < 1) throw DomainError("build_mesh: degree must be >= 1");
    if (set.kind == SetKind::interval) return build_interval_mesh(set, degree);

    const double smax = set.affine.is_identity() ? 1.0 : set.affine.sigma_max();
    const double h = kMeshC0 / (static_cast<double>(degree) * degree * smax);
    const ModelGeometry geo = model_geometry(set.kind, set.alpha);

    auto inside = [&](double x, double y) { return model_contains(set.kind, set.alpha, x, y); };

    std::vector<std::array<double, 2>> pts;
    auto push = [&](double x, double y) {
        pts.push_back({x, y});
        if (pts.size() > kMeshCap)
            throw DomainError("build_mesh: mesh cardinality cap exceeded; reduce the degree");
    };

    // Interior grid.
    const int nx_cells = static_cast<int>(std::ceil((geo.hi[0] - geo.lo[0]) / h));
    const int ny_cells = static_cast<int>(std::ceil((geo.hi[1] - geo.lo[1]) / h));
    if (static_cast<long long>(nx_cells) * ny_cells > 64ll * static_cast<long long>(kMeshCap))
        throw DomainError("build_mesh: mesh cardinality cap exceeded; reduce the degree");
    for (int j = 0; j <= ny_cells; ++j) {
        const double y = geo.lo[1] + j * h;
        for (int i = 0; i <= nx_cells; ++i) {
            const double x = geo.lo[0] + i * h;
            if (inside(x, y)) push(x, y);
        }
    }

    // Boundary samples with graded inward layers.
    const int kLayers = 8;
    const double depth_max = 4.0 * h;
    for (const auto& arc : geo.arcs) {
        const double len = arc_length_estimate(arc);
        const int nu = std::max(8, static_cast<int>(std::ceil(kPi * len / (2.0 * h))));
        const int j_end = arc.closed ? nu - 1 : nu;
        for (int j = 0; j <= j_end; ++j) {
            double u;
            if (arc.closed)
                u = arc.a + (arc.b - arc.a) * j / nu;
            else
                u = arc.a + (arc.b - arc.a) * (1.0 - std::cos(kPi * j / nu)) / 2.0;
            const auto p = arc.gamma(u);
            if (inside(p[0], p[1])) push(p[0], p[1]);
            // Inward normal by probing both sides of the numeric tangent.
            const double du = (arc.b - arc.a) * 1e-6;
            const auto pa = arc.gamma(std::max(arc.a, u - du));
            const auto pb = arc.gamma(std::min(arc.b, u + du));
            double tx = pb[0] - pa[0], ty = pb[1] - pa[1];
            const double tn = std::hypot(tx, ty);
            if (tn == 0.0) continue;
            tx /= tn;
            ty /= tn;
            double nx = -ty, ny = tx;
            const double probe = std::min(1e-6, depth_max / 4);
            if (!inside(p[0] + nx * probe, p[1] + ny * probe)) {
                nx = -nx;
                ny = -ny;
                if (!inside(p[0] + nx * probe, p[1] + ny * probe)) continue;
            }
            for (int l = 1; l <= kLayers; ++l) {
                const double d = depth_max * sq(static_cast<double>(l) / kLayers);
                const double qx = p[0] + nx * d, qy = p[1] + ny * d;
                if (inside(qx, qy)) push(qx, qy);
            }
        }
    }
    for (const auto& c : geo.corners)
        if (inside(c[0], c[1])) push(c[0], c[1]);

    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Mesh mesh;
    mesh.dim = 2;
    mesh.degree_hint = degree;
    mesh.spacing = h * smax;
    mesh.map.inv = set.affine.inverse();
    mesh.map.center = {(geo.lo[0] + geo.hi[0]) / 2, (geo.lo[1] + geo.hi[1]) / 2};
    mesh.map.halfwidth = {(geo.hi[0] - geo.lo[0]) / 2, (geo.hi[1] - geo.lo[1]) / 2};
    mesh.points.reserve(pts.size());
    if (set.affine.is_identity()) {
        mesh.points = std::move(pts);
    } else {
        for (const auto& p : pts) {
            const auto q = set.affine.apply(p[0], p[1]);
            mesh.points.push_back({q[0], q[1]});
        }
    }
    mesh.ensure_normalized();
    return mesh;
}

}  // namespace pluripot
