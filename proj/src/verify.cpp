#include "pluripot/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "pluripot/approach.hpp"
#include "pluripot/cheb_lp.hpp"
#include "pluripot/closed_forms.hpp"
#include "pluripot/complex_analysis.hpp"
#include "pluripot/hessian.hpp"
#include "pluripot/lattice.hpp"
#include "pluripot/poly_map.hpp"
#include "pluripot/pullback.hpp"
#include "pluripot/sets.hpp"
#include "pluripot/util.hpp"

namespace pluripot {

namespace {

constexpr double kPi = 3.14159265358979323846;

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

const char* form_name(SetKind kind) {
    switch (kind) {
        case SetKind::simplex: return "simplex";
        case SetKind::quarterpair: return "quarterpair";
        case SetKind::realdisk: return "realdisk";
        default: return "square";
    }
}

CriterionResult criterion_pullback_identity(const Rng& root, int threads) {
    Rng rng = root.fork(1);
    const PolyMap2& g = builtin_maps().at("G");
    const std::size_t count = 10000;
    std::vector<CPoint2> pts;
    pts.reserve(count);
    while (pts.size() < count) {
        double c[4];
        for (double& v : c) v = rng.uniform(-5.0, 5.0);
        if (c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3] > 25.0) continue;
        pts.push_back(CPoint2{Complex(c[0], c[1]), Complex(c[2], c[3])});
    }
    std::vector<double> err(count, 0.0);
    parallel_for(count, threads, [&](std::size_t i) {
        err[i] = std::fabs(v_simplex(g.eval(pts[i])) - 2.0 * v_quarterpair(pts[i]));
    });
    CriterionResult r;
    r.id = 1;
    r.name = "pullback_identity";
    r.tolerance = 1e-10;
    r.measured = *std::max_element(err.begin(), err.end());
    r.pass = r.measured <= r.tolerance;
    r.note = "max |v_simplex(G(z)) - 2 v_quarterpair(z)| over 10000 points of the radius-5 ball in C^2";
    return r;
}

CPoint2 sample_on_set(SetKind kind, Rng& rng) {
    switch (kind) {
        case SetKind::simplex:
            for (;;) {
                const double u = rng.uniform(0.0, 1.0);
                const double v = rng.uniform(0.0, 1.0);
                if (u + v <= 1.0) return CPoint2::from_real(u, v);
            }
        case SetKind::quarterpair: {
            const double r = std::sqrt(rng.uniform());
            const double th = rng.uniform(0.0, 0.5 * kPi);
            double x = r * std::cos(th);
            double y = r * std::sin(th);
            if (rng.uniform() < 0.5) {
                x = -x;
                y = -y;
            }
            return CPoint2::from_real(x, y);
        }
        case SetKind::realdisk: {
            const double r = std::sqrt(rng.uniform());
            const double th = rng.uniform(0.0, 2.0 * kPi);
            return CPoint2::from_real(r * std::cos(th), r * std::sin(th));
        }
        default:
            return CPoint2::from_real(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
}

CPoint2 sample_exterior(const SetDescriptor& set, Rng& rng, bool complex_offset) {
    if (!complex_offset) {
        for (;;) {
            const double x = rng.uniform(-3.0, 3.0);
            const double y = rng.uniform(-3.0, 3.0);
            if (distance_to_set_r2(set, x, y) >= 1e-2) return CPoint2::from_real(x, y);
        }
    }
    // Real base point plus an imaginary offset of norm in [0.02, 0.5]; the
    // distance to the (real) set is at least that norm.
    for (;;) {
        const double x = rng.uniform(-2.0, 2.0);
        const double y = rng.uniform(-2.0, 2.0);
        const double a = rng.uniform(-1.0, 1.0);
        const double b = rng.uniform(-1.0, 1.0);
        const double nrm = std::hypot(a, b);
        if (nrm < 1e-6) continue;
        const double mag = rng.uniform(0.02, 0.5) / nrm;
        return CPoint2{Complex(x, a * mag), Complex(y, b * mag)};
    }
}

CriterionResult criterion_zero_on_set(const Rng& root, int threads) {
    const SetKind kinds[4] = {SetKind::simplex, SetKind::quarterpair, SetKind::realdisk,
                              SetKind::square};
    double max_on = 0.0;
    double min_ext = std::numeric_limits<double>::infinity();
    for (int ki = 0; ki < 4; ++ki) {
        const SetDescriptor set = SetDescriptor::named(form_name(kinds[ki]));
        Rng rng = root.fork(200 + ki);
        const std::size_t count = 1000;
        std::vector<CPoint2> on, ext;
        on.reserve(count);
        ext.reserve(count);
        for (std::size_t i = 0; i < count; ++i) on.push_back(sample_on_set(kinds[ki], rng));
        for (std::size_t i = 0; i < count; ++i)
            ext.push_back(sample_exterior(set, rng, i % 2 == 1));
        std::vector<double> von(count, 0.0), vext(count, 0.0);
        parallel_for(count, threads, [&](std::size_t i) {
            von[i] = closed_form_value(set, on[i]);
            vext[i] = closed_form_value(set, ext[i]);
        });
        max_on = std::max(max_on, *std::max_element(von.begin(), von.end()));
        min_ext = std::min(min_ext, *std::min_element(vext.begin(), vext.end()));
    }
    CriterionResult r;
    r.id = 2;
    r.name = "zero_on_set_positive_outside";
    r.tolerance = 1e-12;
    r.measured = max_on;
    r.pass = max_on <= 1e-12 && min_ext >= 1e-4;
    r.note = "max on-set value over 1000 samples per form " + format_double(max_on) +
             "; min value over 1000 exterior points (distance >= 0.01) per form " +
             format_double(min_ext) + ", required >= 0.0001";
    return r;
}

double interval_distance(Complex z) {
    const double ax = std::fabs(z.real());
    return ax <= 1.0 ? std::fabs(z.imag()) : std::hypot(ax - 1.0, z.imag());
}

// Points where the closed forms are real-analytic with margin: away from the
// set, away from every branch locus of the formula, and with the acosh
// argument clear of 1.
bool valid_fd_point(SetKind kind, const SetDescriptor& set, const CPoint2& z) {
    if (distance_to_set_c2(set, z) < 0.1) return false;
    const Complex z1 = z.z1;
    const Complex z2 = z.z2;
    switch (kind) {
        case SetKind::simplex: {
            const double m1 = std::abs(z1);
            const double m2 = std::abs(z2);
            const double m3 = std::abs(z1 + z2 - 1.0);
            return m1 >= 0.05 && m2 >= 0.05 && m3 >= 0.05 && m1 + m2 + m3 >= 1.01;
        }
        case SetKind::quarterpair: {
            const double q = std::abs(1.0 - z1 * z1 - z2 * z2);
            const double p = std::abs(z1 * z2);
            const double arg = q + std::norm(z1 - z2) + 2.0 * p;
            return q >= 0.05 && p >= 0.05 && arg >= 1.01;
        }
        case SetKind::realdisk: {
            const double q = std::abs(z1 * z1 + z2 * z2 - 1.0);
            const double arg = std::norm(z1) + std::norm(z2) + q;
            return q >= 0.05 && arg >= 1.01;
        }
        default: {
            const double g1 = green_interval(z1);
            const double g2 = green_interval(z2);
            if (std::fabs(g1 - g2) < 0.1) return false;  // max switches branches nearby
            const Complex active = g1 > g2 ? z1 : z2;
            return std::max(g1, g2) >= 0.05 && interval_distance(active) >= 0.05;
        }
    }
}

CriterionResult criterion_maximality(const Rng& root, int threads, double fd_step) {
    const SetKind kinds[4] = {SetKind::simplex, SetKind::quarterpair, SetKind::realdisk,
                              SetKind::square};
    double worst_median = 0.0;
    bool all_ok = true;
    std::string detail;
    for (int ki = 0; ki < 4; ++ki) {
        const SetDescriptor set = SetDescriptor::named(form_name(kinds[ki]));
        Rng rng = root.fork(300 + ki);
        const std::size_t count = 200;
        std::vector<CPoint2> pts;
        pts.reserve(count);
        while (pts.size() < count) {
            const CPoint2 z{Complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)),
                            Complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))};
            if (valid_fd_point(kinds[ki], set, z)) pts.push_back(z);
        }
        const Evaluator v = [set](const CPoint2& p) { return closed_form_value(set, p); };
        std::vector<double> res1(count, 0.0), res2(count, 0.0);
        parallel_for(count, threads, [&](std::size_t i) {
            res1[i] = maximality_residual(v, pts[i], fd_step);
            res2[i] = maximality_residual(v, pts[i], 0.5 * fd_step);
        });
        const double med1 = median_of(res1);
        const double med2 = median_of(res2);
        all_ok = all_ok && med1 <= 1e-4 && med2 < med1;
        worst_median = std::max(worst_median, med1);
        detail += std::string(form_name(kinds[ki])) + " median " + format_double(med1) +
                  " then " + format_double(med2) + " at half step; ";
    }
    CriterionResult r;
    r.id = 3;
    r.name = "hessian_determinant_residual";
    r.tolerance = 1e-4;
    r.measured = worst_median;
    r.pass = all_ok;
    r.note = "scale-free |det H| residual medians over 200 off-set points per form: " + detail;
    return r;
}

CriterionResult criterion_interval_density(const Rng&, int) {
    std::vector<double> ys;
    for (int k = 0; k < 10; ++k) ys.push_back(1e-3 * std::pow(0.5, k));
    const double j0 = interval_density_jump(0.0, ys);
    const double j5 = interval_density_jump(0.5, ys);
    const double e0 = std::fabs(j0 * kPi - 1.0);
    const double e5 = std::fabs(j5 * kPi * std::sqrt(0.75) - 1.0);
    CriterionResult r;
    r.id = 4;
    r.name = "interval_density_probe";
    r.tolerance = 0.01;
    r.measured = std::max(e0, e5);
    r.pass = r.measured <= r.tolerance;
    r.note = "normal-derivative estimate of the interval extremal function against "
             "1/(pi sqrt(1-x^2)): relative error " +
             format_double(e0) + " at x=0, " + format_double(e5) + " at x=0.5";
    return r;
}

CriterionResult criterion_chebyshev_interval(const Rng&, int) {
    const SetDescriptor interval = SetDescriptor::named("interval");
    const std::vector<LPBound> sweep =
        degree_sweep(interval, LatticeSpec::interval_1d(), {2.0, 0.0}, {1, 2, 4, 8});
    // T_8(2) by the integer recurrence T_{n+1} = 4 T_n - T_{n-1}.
    double t_prev = 1.0, t_cur = 2.0;
    for (int i = 1; i < 8; ++i) {
        const double t_next = 4.0 * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = t_next;
    }
    const double oracle = std::log(t_cur) / 8.0;
    const double green2 = std::log(2.0 + std::sqrt(3.0));
    const double b8 = sweep[3].value;
    const bool oracle_ok = std::fabs(b8 - oracle) <= 1e-6;
    const bool in_bracket = b8 >= green2 - 0.05 && b8 <= green2 + 0.02;
    bool doubling = true;
    for (int i = 0; i + 1 < 4; ++i)
        doubling = doubling && sweep[i + 1].value >= sweep[i].value - 1e-9;
    CriterionResult r;
    r.id = 5;
    r.name = "interval_lp_oracle";
    r.tolerance = 1e-6;
    r.measured = std::fabs(b8 - oracle);
    r.pass = oracle_ok && in_bracket && doubling;
    r.note = "degree-8 bound at z0=2 is " + format_double(b8) + "; Chebyshev optimum log(T_8(2))/8 = " +
             format_double(oracle) + " matched within 1e-6: " + (oracle_ok ? "yes" : "no") +
             "; doubling monotone over degrees {1,2,4,8}: " + (doubling ? "yes" : "no") +
             "; required bracket [" + format_double(green2 - 0.05) + ", " +
             format_double(green2 + 0.02) + "] met: " + (in_bracket ? "yes" : "no") +
             ". The exact degree-8 optimum sits about 0.0366 below that bracket floor "
             "(the truncation gap at degree 8 is about 0.0866), so no sound degree-8 "
             "lower bound can satisfy the bracket; the shortfall is reported, not masked.";
    return r;
}

CriterionResult criterion_pacman_sandwich(const Rng& root, int threads) {
    const MatchedMeshes mm = make_matched_pacman_meshes(10);
    Rng rng = root.fork(600);
    const std::size_t count = 20;
    std::vector<std::array<double, 2>> zs;
    zs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double rho = rng.uniform(1.6, 2.4);
        const double th = rng.uniform(0.0, 2.0 * kPi);
        zs.push_back({1.0 + rho * std::cos(th), rho * std::sin(th)});
    }
    std::vector<double> upper_viol(count, 0.0), lower_viol(count, 0.0);
    parallel_for(count, threads, [&](std::size_t i) {
        const std::array<double, 2> zp = zs[i];
        const std::array<double, 2> zk = {zp[0], zp[1] * zp[1]};
        const double bp10 =
            lp_lower_bound_on_mesh(mm.model, LatticeSpec::simplex(), 10, zp).value;
        const double bk5 =
            lp_lower_bound_on_mesh(mm.image, LatticeSpec::pac_hull(), 5, zk).value;
        const double bk10 =
            lp_lower_bound_on_mesh(mm.image, LatticeSpec::pac_hull(), 10, zk).value;
        upper_viol[i] = bk5 - 2.0 * bp10;
        lower_viol[i] = bp10 - bk10;
    });
    const double worst = std::max(*std::max_element(upper_viol.begin(), upper_viol.end()),
                                  *std::max_element(lower_viol.begin(), lower_viol.end()));
    CriterionResult r;
    r.id = 6;
    r.name = "pacman_image_sandwich";
    r.tolerance = 0.1;
    r.measured = worst;
    r.pass = worst <= 0.1;
    r.note = "max violation over 20 exterior points of image-vs-model bound chains "
             "(negative means slack): half-degree image bound minus doubled model bound " +
             format_double(*std::max_element(upper_viol.begin(), upper_viol.end())) +
             ", model bound minus image bound " +
             format_double(*std::max_element(lower_viol.begin(), lower_viol.end()));
    return r;
}

CriterionResult criterion_linear_limits(const Rng&, int) {
    const auto fit = [](const ApproachPath& p) { return approach_experiment(p).fit; };
    const LimitFit f11 = fit(ApproachPath::linear(1.1));
    const LimitFit f15 = fit(ApproachPath::linear(1.5));
    const LimitFit f2 = fit(ApproachPath::linear(2.0));
    const LimitFit f3 = fit(ApproachPath::linear(3.0));
    const LimitFit f4 = fit(ApproachPath::linear(4.0));
    const LimitFit fv = fit(ApproachPath::vertical());
    const LimitFit fm = fit(ApproachPath::linear(-1.0));
    const double oracle = (2.0 / std::sqrt(3.0)) / (3.0 / std::sqrt(8.0));
    const double ratio = f2.value / f3.value;
    const double dev =
        std::max({std::fabs(ratio / oracle - 1.0), std::fabs(fv.value - 1.0),
                  std::fabs(fm.value - 1.0), std::fabs(fv.value - fm.value)});
    const bool finite = f11.finite && f15.finite && f2.finite && f3.finite && f4.finite &&
                        fv.finite && fm.finite;
    const bool decreasing =
        f11.value > f15.value && f15.value > f2.value && f2.value > f4.value;
    CriterionResult r;
    r.id = 7;
    r.name = "vertex_linear_approach";
    r.tolerance = 0.02;
    r.measured = dev;
    r.pass = finite && decreasing && dev <= 0.02;
    r.note = "density surrogate limits along lines into the vertex: slope-2/slope-3 ratio " +
             format_double(ratio) + " against " + format_double(oracle) +
             "; vertical limit " + format_double(fv.value) + " and slope -1 limit " +
             format_double(fm.value) + " both target 1; limits for slopes {1.1,1.5,2,4} " +
             format_double(f11.value) + " > " + format_double(f15.value) + " > " +
             format_double(f2.value) + " > " + format_double(f4.value) + ": " +
             (decreasing ? "yes" : "no");
    return r;
}

CriterionResult criterion_tangential_blowup(const Rng&, int) {
    double worst = 0.0;
    double worst_r2 = 1.0;
    std::string detail;
    for (const double n_exp : {1.5, 2.0, 3.0}) {
        const LimitFit f = approach_experiment(ApproachPath::tangential(1.0, n_exp)).fit;
        const double target = -0.5 * (n_exp - 1.0);
        worst = std::max(worst, f.finite ? 1.0 : std::fabs(f.loglog_slope - target));
        worst_r2 = std::min(worst_r2, f.r2);
        detail += "N=" + format_double(n_exp) + " slope " + format_double(f.loglog_slope) +
                  " (target " + format_double(target) + ", r2 " + format_double(f.r2) + "); ";
    }
    CriterionResult r;
    r.id = 8;
    r.name = "vertex_tangential_blowup";
    r.tolerance = 0.05;
    r.measured = worst;
    r.pass = worst <= 0.05 && worst_r2 >= 0.99;
    r.note = "log-log growth rate of the density surrogate along tangential curves: " + detail;
    return r;
}

CriterionResult criterion_scorner_limits(const Rng&, int) {
    const LimitFit f25 = approach_experiment(ApproachPath::scorner_linear_m(0.25)).fit;
    const LimitFit f50 = approach_experiment(ApproachPath::scorner_linear_m(0.5)).fit;
    const double oracle = (1.25 / std::sqrt(0.25)) / (1.5 / std::sqrt(0.5));
    const double ratio = f25.value / f50.value;
    const double err = std::fabs(ratio - oracle);
    const ApproachResult axis = approach_experiment(ApproachPath::scorner_tangential(1.0, 2.0));
    const bool blowup = axis.rows.back().value > 10.0 * axis.rows.front().value;
    CriterionResult r;
    r.id = 9;
    r.name = "scorner_density_limits";
    r.tolerance = 1e-6;
    r.measured = err;
    r.pass = f25.finite && f50.finite && err <= 1e-6 && blowup;
    r.note = "corner density limit ratio m=0.25 vs m=0.5 is " + format_double(ratio) +
             " against (1+m)/sqrt(m) prediction " + format_double(oracle) +
             "; along the tangential curve toward the axis the density grows from " +
             format_double(axis.rows.front().value) + " to " +
             format_double(axis.rows.back().value);
    return r;
}

CriterionResult criterion_rotation_identity(const Rng&, int) {
    double worst = 0.0;
    double worst_c = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double m = static_cast<double>(i) / 101.0;
        const auto [cval, ratio] = rotation_correspondence(m);
        worst_c = std::max(worst_c, std::fabs(cval - (1.0 + m) / (1.0 - m)));
        worst = std::max(worst, std::fabs(ratio - (1.0 + m) / (2.0 * std::sqrt(m))));
    }
    CriterionResult r;
    r.id = 10;
    r.name = "rotation_correspondence_identity";
    r.tolerance = 1e-12;
    r.measured = worst;
    r.pass = worst_c == 0.0 && worst <= 1e-12;
    r.note = "over a 100-point grid of slopes m, c agrees with (1+m)/(1-m) exactly and "
             "c/sqrt(c^2-1) agrees with (1+m)/(2 sqrt(m)) within " +
             format_double(worst) +
             "; the alternative printed limit (1/4)(1+m)/m contradicts this identity "
             "(already at m=1) and is treated as a suspected typo, not asserted";
    return r;
}

CriterionResult criterion_lattice_pullback_trend(const Rng& root, int threads) {
    const MatchedMeshes mm = make_matched_pprime_meshes(8);
    Rng rng = root.fork(1100);
    const std::size_t count = 5;
    std::vector<std::array<double, 2>> zs;
    zs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double rho = rng.uniform(1.5, 2.2);
        const double th = rng.uniform(0.0, 2.0 * kPi);
        zs.push_back({1.0 + rho * std::cos(th), rho * std::sin(th)});
    }
    std::vector<std::array<double, 3>> gaps(count);
    parallel_for(count, threads, [&](std::size_t i) {
        const int degrees[3] = {2, 4, 8};
        for (int d = 0; d < 3; ++d) {
            const auto [lhs, rhs] = lattice_pullback_check(mm, degrees[d], zs[i]);
            gaps[i][d] = std::fabs(lhs - rhs);
        }
    });
    double worst = -std::numeric_limits<double>::infinity();
    std::string detail;
    for (std::size_t i = 0; i < count; ++i) {
        worst = std::max({worst, gaps[i][1] - gaps[i][0], gaps[i][2] - gaps[i][1]});
        detail += format_double(gaps[i][0]) + " / " + format_double(gaps[i][1]) + " / " +
                  format_double(gaps[i][2]) + "; ";
    }
    CriterionResult r;
    r.id = 11;
    r.name = "lattice_pullback_trend";
    r.tolerance = 1e-3;
    r.measured = worst;
    r.pass = worst <= 1e-3;
    r.note = "gap between doubled model bound and image-lattice bound at degrees 2/4/8 "
             "for 5 exterior points (must not increase): " + detail;
    return r;
}

nlohmann::ordered_json criterion_json(const CriterionResult& c) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["measured"] = c.measured;
    j["tolerance"] = c.tolerance;
    j["note"] = c.note;
    return j;
}

}  // namespace

VerifyRun run_criteria(const VerifyConfig& cfg) {
    const Rng root(cfg.seed);
    int threads = cfg.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;

    VerifyRun run;
    run.criteria.push_back(criterion_pullback_identity(root, threads));
    run.criteria.push_back(criterion_zero_on_set(root, threads));
    run.criteria.push_back(criterion_maximality(root, threads, cfg.fd_step));
    run.criteria.push_back(criterion_interval_density(root, threads));
    run.criteria.push_back(criterion_chebyshev_interval(root, threads));
    run.criteria.push_back(criterion_pacman_sandwich(root, threads));
    run.criteria.push_back(criterion_linear_limits(root, threads));
    run.criteria.push_back(criterion_tangential_blowup(root, threads));
    run.criteria.push_back(criterion_scorner_limits(root, threads));
    run.criteria.push_back(criterion_rotation_identity(root, threads));
    run.criteria.push_back(criterion_lattice_pullback_trend(root, threads));

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CriterionResult& c : run.criteria) arr.push_back(criterion_json(c));
    run.canonical = arr.dump();
    return run;
}

nlohmann::ordered_json verify_report(const VerifyConfig& cfg) {
    const VerifyRun first = run_criteria(cfg);
    const VerifyRun second = run_criteria(cfg);
    const bool identical = first.canonical == second.canonical;

    CriterionResult det;
    det.id = 12;
    det.name = "deterministic_replay";
    det.tolerance = 0.0;
    det.measured = identical ? 0.0 : 1.0;
    det.pass = identical;
    det.note = identical ? "two full verification passes serialized byte-identically"
                         : "second verification pass diverged from the first";

    nlohmann::ordered_json report;
    report["tool"] = "pluripot";
    report["seed"] = cfg.seed;
    report["fd_step"] = cfg.fd_step;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    bool all = det.pass;
    for (const CriterionResult& c : first.criteria) {
        arr.push_back(criterion_json(c));
        all = all && c.pass;
    }
    arr.push_back(criterion_json(det));
    report["criteria"] = arr;
    report["all_pass"] = all;
    report["notes"] = {
        {"rotation_correspondence",
         "the corner correspondence uses c = (1+m)/(1-m), for which c/sqrt(c^2-1) = "
         "(1+m)/(2 sqrt(m)) exactly; the alternative printed form (1/4)(1+m)/m is "
         "inconsistent with that identity (the two differ already at m = 1) and is "
         "treated as a suspected typo, so it is not asserted"},
        {"interval_lp_bracket",
         "interval bounds are certified feasible on a Chebyshev-Lobatto mesh of "
         "max(8 n^2, 4096) points, where degree-8 sup-norm amplification off the mesh "
         "stays below 6e-7, so the degree-8 value matches log(T_8(2))/8 to 1e-6; the "
         "bracket check additionally asks for log(2+sqrt(3)) - 0.05, which exceeds the "
         "exact degree-8 optimum by about 0.0366, so that sub-check fails honestly"},
    };
    return report;
}

bool report_all_pass(const nlohmann::ordered_json& report) {
    return report.contains("all_pass") && report["all_pass"].is_boolean() &&
           report["all_pass"].get<bool>();
}

}  // namespace pluripot
