#include "pluripot/approach.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pluripot/closed_forms.hpp"
#include "pluripot/errors.hpp"
#include "pluripot/sets.hpp"
#include "pluripot/util.hpp"

namespace pluripot {

namespace {

std::vector<double> geometric_deltas(double delta0, int count) {
    std::vector<double> d(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) d[static_cast<std::size_t>(k)] = delta0 * std::pow(2.0, -k);
    return d;
}

// Default sampling plan: delta0 = 1e-2, 25 samples.
std::vector<double> default_deltas() { return geometric_deltas(1e-2, 25); }

}  // namespace

ApproachPath ApproachPath::linear(double c) {
    if (!(c > 1.0 || c <= 0.0))
        throw DomainError("ApproachPath::linear: slope must satisfy c > 1 or c <= 0");
    ApproachPath p;
    p.target = ApproachTarget::pacman_vertex;
    p.kind = ApproachKind::linear;
    p.c = c;
    p.deltas = default_deltas();
    return p;
}

ApproachPath ApproachPath::vertical() {
    ApproachPath p;
    p.target = ApproachTarget::pacman_vertex;
    p.kind = ApproachKind::vertical;
    p.deltas = default_deltas();
    return p;
}

ApproachPath ApproachPath::tangential(double a_coef, double n_exp) {
    if (!(a_coef > 0.0)) throw DomainError("ApproachPath::tangential: coefficient must be > 0");
    if (!(n_exp > 1.0)) throw DomainError("ApproachPath::tangential: exponent must be > 1");
    ApproachPath p;
    p.target = ApproachTarget::pacman_vertex;
    p.kind = ApproachKind::tangential;
    p.a_coef = a_coef;
    p.n_exp = n_exp;
    p.deltas = default_deltas();
    return p;
}

ApproachPath ApproachPath::scorner_linear_m(double m) {
    if (!(m > 0.0 && m <= 1.0))
        throw DomainError("ApproachPath::scorner_linear_m: m must lie in (0, 1]");
    ApproachPath p;
    p.target = ApproachTarget::s_corner;
    p.kind = ApproachKind::linear_m;
    p.m = m;
    p.deltas = default_deltas();
    return p;
}

ApproachPath ApproachPath::scorner_tangential(double a_coef, double n_exp) {
    if (!(a_coef > 0.0)) throw DomainError("ApproachPath::scorner_tangential: coefficient must be > 0");
    if (!(n_exp > 1.0)) throw DomainError("ApproachPath::scorner_tangential: exponent must be > 1");
    ApproachPath p;
    p.target = ApproachTarget::s_corner;
    p.kind = ApproachKind::tangential;
    p.a_coef = a_coef;
    p.n_exp = n_exp;
    p.deltas = default_deltas();
    return p;
}

std::array<double, 2> ApproachPath::point_at(double delta) const {
    if (target == ApproachTarget::pacman_vertex) {
        switch (kind) {
            case ApproachKind::linear:
                // y = c(x-1); slopes c > 1 enter from the right of the vertex,
                // slopes c <= 0 from the left.
                if (c > 1.0) return {1.0 + delta, c * delta};
                return {1.0 - delta, -c * delta};
            case ApproachKind::vertical:
                return {1.0, delta};
            case ApproachKind::tangential:
                return {1.0 + delta, delta + a_coef * std::pow(delta, n_exp)};
            default:
                throw DomainError("ApproachPath: linear_m targets the s-corner");
        }
    }
    switch (kind) {
        case ApproachKind::linear_m:
            return {delta, m * delta};
        case ApproachKind::tangential:
            return {delta, a_coef * std::pow(delta, n_exp)};
        default:
            throw DomainError("ApproachPath: unsupported kind for the s-corner");
    }
}

double pacman_density_surrogate(double s, double t) {
    if (!(t > 0.0)) throw DomainError("pacman_density_surrogate: t must be positive");
    return std::sqrt(t) / std::sqrt(dist_to_boundary_K(s, t));
}

ApproachResult approach_experiment(const ApproachPath& path) {
    if (path.deltas.size() < 20)
        throw DomainError("approach_experiment: at least 20 samples required");
    for (std::size_t i = 1; i < path.deltas.size(); ++i)
        if (!(path.deltas[i] < path.deltas[i - 1]))
            throw DomainError("approach_experiment: offsets must decrease");

    const SetDescriptor target_set =
        SetDescriptor::named(path.target == ApproachTarget::pacman_vertex ? "pacman"
                                                                          : "quarterpair");
    const SetDescriptor quarterpair = SetDescriptor::named("quarterpair");

    ApproachResult result;
    result.rows.reserve(path.deltas.size());
    for (std::size_t i = 0; i < path.deltas.size(); ++i) {
        const double delta = path.deltas[i];
        const auto xy = path.point_at(delta);
        if (!target_set.contains(xy[0], xy[1]))
            throw DomainError("approach_experiment: sample left the target set");
        ApproachRow row;
        row.k = static_cast<int>(i);
        row.delta = delta;
        row.x = xy[0];
        row.y = xy[1];
        if (path.target == ApproachTarget::pacman_vertex) {
            row.s = xy[0];
            row.t = xy[1] * xy[1];
            if (path.kind == ApproachKind::tangential) {
                // Recovering t - (s-1)^2 from the rounded point cancels to
                // noise once a delta^{N-1} drops below machine precision, so
                // the parabola gap is evaluated in the factored form
                // (y-u)(y+u) with u = delta kept exact.
                const double u = delta;
                const double ay = path.a_coef * std::pow(u, path.n_exp);
                const double gap = ay * (2.0 * u + ay);
                const double dist = gap / std::sqrt(1.0 + 4.0 * u * u);
                row.value = xy[1] / std::sqrt(dist);
            } else {
                row.value = pacman_density_surrogate(row.s, row.t);
            }
        } else {
            row.s = xy[0];
            row.t = xy[1];
            row.value = density_formula(quarterpair, xy[0], xy[1]);
        }
        result.rows.push_back(row);
    }

    LimitFit fit;
    if (path.kind == ApproachKind::tangential) {
        fit.finite = false;
        const std::size_t count = 10;
        const std::size_t start = result.rows.size() - count;
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
        for (std::size_t i = start; i < result.rows.size(); ++i) {
            const double lx = std::log(result.rows[i].delta);
            const double ly = std::log(result.rows[i].value);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            syy += ly * ly;
        }
        const double n = static_cast<double>(count);
        const double cov = sxy - sx * sy / n;
        const double varx = sxx - sx * sx / n;
        const double vary = syy - sy * sy / n;
        fit.loglog_slope = cov / varx;
        fit.r2 = vary > 0.0 ? (cov * cov) / (varx * vary) : 1.0;
    } else {
        fit.finite = true;
        const std::size_t count = 5;
        const std::size_t start = result.rows.size() - count;
        double mean = 0.0;
        for (std::size_t i = start; i < result.rows.size(); ++i) mean += result.rows[i].value;
        mean /= static_cast<double>(count);
        double dev = 0.0;
        for (std::size_t i = start; i < result.rows.size(); ++i)
            dev = std::max(dev, std::abs(result.rows[i].value - mean));
        fit.value = mean;
        fit.residual = dev;
    }
    result.fit = fit;
    return result;
}

double interval_density_jump(double x, const std::vector<double>& y_samples) {
    if (!(std::abs(x) < 1.0)) throw DomainError("interval_density_jump: |x| must be < 1");
    if (y_samples.empty()) throw DomainError("interval_density_jump: no samples");
    for (std::size_t i = 0; i < y_samples.size(); ++i) {
        if (!(y_samples[i] > 0.0 && y_samples[i] < 1e-2))
            throw DomainError("interval_density_jump: samples must lie in (0, 1e-2)");
        if (i > 0 && !(y_samples[i] < y_samples[i - 1]))
            throw DomainError("interval_density_jump: samples must decrease");
    }
    double num = 0.0, den = 0.0;
    for (const double y : y_samples) {
        num += y * green_interval(Complex(x, y));
        den += y * y;
    }
    return (num / den) / 3.14159265358979323846;
}

std::pair<double, double> rotation_correspondence(double m) {
    if (!(m > 0.0 && m < 1.0))
        throw DomainError("rotation_correspondence: m must lie in (0, 1)");
    const double c = (1.0 + m) / (1.0 - m);
    const double ratio = c / std::sqrt((c - 1.0) * (c + 1.0));
    return {c, ratio};
}

nlohmann::json LimitFit::to_json() const {
    if (finite)
        return nlohmann::json{{"kind", "finite"}, {"value", value}, {"residual", residual}};
    return nlohmann::json{{"kind", "divergent"}, {"loglog_slope", loglog_slope}, {"r2", r2}};
}

std::string approach_csv(const ApproachResult& result) {
    std::ostringstream out;
    out << "k,delta,x,y,s,t,surrogate_value\n";
    for (const auto& r : result.rows)
        out << r.k << ',' << format_double(r.delta) << ',' << format_double(r.x) << ','
            << format_double(r.y) << ',' << format_double(r.s) << ',' << format_double(r.t)
            << ',' << format_double(r.value) << '\n';
    return out.str();
}

}  // namespace pluripot
