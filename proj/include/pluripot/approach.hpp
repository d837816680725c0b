#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace pluripot {

enum class ApproachTarget { pacman_vertex, s_corner };
enum class ApproachKind { linear, vertical, tangential, linear_m };

// Parametrized path into the Pac-Man vertex (1,0) or the quarter-pair corner
// (0,0), sampled at a decreasing geometric sequence of offsets.
struct ApproachPath {
    ApproachTarget target = ApproachTarget::pacman_vertex;
    ApproachKind kind = ApproachKind::vertical;
    double c = 0.0;       // linear slope y = c(x-1); requires c > 1 or c <= 0
    double a_coef = 0.0;  // tangential coefficient, > 0
    double n_exp = 0.0;   // tangential exponent, > 1
    double m = 0.0;       // s-corner slope v = m u, m in (0,1]
    std::vector<double> deltas;

    static ApproachPath linear(double c);
    static ApproachPath vertical();
    static ApproachPath tangential(double a_coef, double n_exp);
    static ApproachPath scorner_linear_m(double m);
    static ApproachPath scorner_tangential(double a_coef, double n_exp);

    // Path point at offset delta: (x,y) near the pacman vertex, (u,v) near the
    // quarter-pair corner.
    std::array<double, 2> point_at(double delta) const;
};

struct ApproachRow {
    int k = 0;
    double delta = 0.0;
    double x = 0.0, y = 0.0;
    double s = 0.0, t = 0.0;
    double value = 0.0;
};

struct LimitFit {
    bool finite = true;
    double value = 0.0;         // FiniteLimit: mean of the last 5 samples
    double residual = 0.0;      // FiniteLimit: max deviation of those samples
    double loglog_slope = 0.0;  // Divergent: slope of log value vs log delta
    double r2 = 0.0;            // Divergent: fit quality over the last 10

    nlohmann::json to_json() const;
};

struct ApproachResult {
    std::vector<ApproachRow> rows;
    LimitFit fit;
};

// sqrt(t) / sqrt(dist((s,t), boundary of the parabola-bounded convex set)).
double pacman_density_surrogate(double s, double t);

// Samples the density surrogate (pacman target, with (s,t) = (x, y^2)) or the
// quarter-pair density (s-corner target) along the path and fits a finite
// limit (linear/vertical/linear_m) or a log-log divergence (tangential).
ApproachResult approach_experiment(const ApproachPath& path);

// Least-squares through-origin slope of green_interval(x+iy) against y,
// divided by pi; converges to the interval equilibrium density.
double interval_density_jump(double x, const std::vector<double>& y_samples);

// c = (1+m)/(1-m) together with c/sqrt(c^2-1), which equals (1+m)/(2 sqrt(m)).
std::pair<double, double> rotation_correspondence(double m);

// CSV serialization with header k,delta,x,y,s,t,surrogate_value.
std::string approach_csv(const ApproachResult& result);

}  // namespace pluripot
