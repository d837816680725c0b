#include "pluripot/cheb_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "pluripot/errors.hpp"
#include "pluripot/kernels.hpp"

namespace pluripot {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kPriceTol = 1e-9;
// Dual feasibility (optimality) tolerance for phase 2.  Tighter values make
// the solver chase noise-level reduced costs on ill-conditioned bases; the
// final bound is certified by replaying the certificate, so the only effect
// of the tolerance is where the pivoting stops.
constexpr double kDualFeasTol = 1e-7;
constexpr double kArtificialTol = 1e-7;
constexpr int kStallLimit = 200;
constexpr int kIterationCap = 100000;

// Per-term column scaling: max |u^J| over the mesh, floored away from zero.
// Optionally records which mesh point attains each column's maximum; a
// point subset containing those keeps every scaled column at unit size.
std::vector<double> compute_column_scales(const Mesh& mesh, const std::vector<int>& jx,
                                          const std::vector<int>& jy, int max_exp,
                                          std::vector<int>* argmax_idx = nullptr) {
    std::vector<double> scale(jx.size(), 0.0);
    if (argmax_idx) argmax_idx->assign(jx.size(), 0);
    std::vector<double> px(static_cast<std::size_t>(max_exp) + 1, 1.0);
    std::vector<double> py(static_cast<std::size_t>(max_exp) + 1, 1.0);
    for (std::size_t i = 0; i < mesh.points.size(); ++i) {
        const double ax = std::abs(mesh.nx[i]);
        const double ay = std::abs(mesh.ny[i]);
        for (int e = 1; e <= max_exp; ++e) {
            px[static_cast<std::size_t>(e)] = px[static_cast<std::size_t>(e - 1)] * ax;
            py[static_cast<std::size_t>(e)] = py[static_cast<std::size_t>(e - 1)] * ay;
        }
        for (std::size_t t = 0; t < jx.size(); ++t) {
            const double v = px[static_cast<std::size_t>(jx[t])] *
                             py[static_cast<std::size_t>(jy[t])];
            if (v > scale[t]) {
                scale[t] = v;
                if (argmax_idx) (*argmax_idx)[t] = static_cast<int>(i);
            }
        }
    }
    for (auto& s : scale) s = std::max(s, 1e-8);
    return scale;
}

// Dense LU with partial pivoting; N stays small (a few hundred).
struct LU {
    int n = 0;
    std::vector<double> a;  // column-major
    std::vector<int> piv;

    void factor(std::vector<double> m, int dim) {
        n = dim;
        a = std::move(m);
        piv.resize(static_cast<std::size_t>(n));
        for (int col = 0; col < n; ++col) {
            int best = col;
            double best_abs = std::abs(a[static_cast<std::size_t>(col * n + col)]);
            for (int r = col + 1; r < n; ++r) {
                const double cand = std::abs(a[static_cast<std::size_t>(col * n + r)]);
                if (cand > best_abs) {
                    best_abs = cand;
                    best = r;
                }
            }
            piv[static_cast<std::size_t>(col)] = best;
            if (best_abs < 1e-300) throw LPError("singular basis matrix");
            if (best != col)
                for (int c = 0; c < n; ++c)
                    std::swap(a[static_cast<std::size_t>(c * n + col)],
                              a[static_cast<std::size_t>(c * n + best)]);
            const double d = a[static_cast<std::size_t>(col * n + col)];
            for (int r = col + 1; r < n; ++r) {
                const double f = a[static_cast<std::size_t>(col * n + r)] / d;
                a[static_cast<std::size_t>(col * n + r)] = f;
                if (f != 0.0)
                    for (int c = col + 1; c < n; ++c)
                        a[static_cast<std::size_t>(c * n + r)] -=
                            f * a[static_cast<std::size_t>(c * n + col)];
            }
        }
    }

    // Solve A x = b.  The permutation must be fully applied before the
    // column-oriented forward pass touches rows below the diagonal.
    std::vector<double> solve(std::vector<double> b) const {
        for (int col = 0; col < n; ++col) {
            const int p = piv[static_cast<std::size_t>(col)];
            if (p != col) std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(p)]);
        }
        for (int col = 0; col < n; ++col) {
            const double bv = b[static_cast<std::size_t>(col)];
            if (bv != 0.0)
                for (int r = col + 1; r < n; ++r)
                    b[static_cast<std::size_t>(r)] -= a[static_cast<std::size_t>(col * n + r)] * bv;
        }
        for (int col = n - 1; col >= 0; --col) {
            double v = b[static_cast<std::size_t>(col)];
            for (int c = col + 1; c < n; ++c)
                v -= a[static_cast<std::size_t>(c * n + col)] * b[static_cast<std::size_t>(c)];
            b[static_cast<std::size_t>(col)] = v / a[static_cast<std::size_t>(col * n + col)];
        }
        return b;
    }

    // Solve A^T x = b (same factorization: A = P^T L U, so A^T = U^T L^T P).
    std::vector<double> solve_transpose(std::vector<double> b) const {
        for (int col = 0; col < n; ++col) {
            double v = b[static_cast<std::size_t>(col)];
            for (int c = 0; c < col; ++c)
                v -= a[static_cast<std::size_t>(col * n + c)] * b[static_cast<std::size_t>(c)];
            b[static_cast<std::size_t>(col)] = v / a[static_cast<std::size_t>(col * n + col)];
        }
        // Backward substitution for L^T, then apply P^T.
        for (int col = n - 1; col >= 0; --col) {
            double v = b[static_cast<std::size_t>(col)];
            for (int r = col + 1; r < n; ++r)
                v -= a[static_cast<std::size_t>(col * n + r)] * b[static_cast<std::size_t>(r)];
            b[static_cast<std::size_t>(col)] = v;
        }
        for (int col = n - 1; col >= 0; --col) {
            const int p = piv[static_cast<std::size_t>(col)];
            if (p != col) std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(p)]);
        }
        return b;
    }
};

struct DualSimplex {
    const Mesh& mesh;
    int n_degree;
    std::vector<std::array<int, 2>> exponents;
    std::vector<int> jx, jy;
    int max_exp = 0;
    int num_terms = 0;   // N
    int num_points = 0;  // M
    std::vector<double> scale;   // per-term column scaling
    std::vector<double> c;       // scaled objective coefficients at z0
    std::vector<int> basis;      // column ids: 2i / 2i+1 real, 2M+r artificial
    std::vector<double> y;       // basic dual solution
    LU lu;
    std::vector<double> price;   // per-point pricing values
    double feas_tol = 1e-9;      // scale-aware feasibility tolerance
    double c_norm = 1.0;         // RHS normalization factor (max |c| pre-scaling)
    int iterations = 0;

    DualSimplex(const Mesh& m, const LatticeSpec& lattice, int n, std::array<double, 2> z0,
                const std::vector<double>* frozen_scale = nullptr)
        : mesh(m), n_degree(n) {
        exponents = lattice.enumerate(n);
        num_terms = static_cast<int>(exponents.size());
        num_points = static_cast<int>(mesh.points.size());
        if (num_points < num_terms)
            throw LPError("mesh smaller than the polynomial space; raise the mesh degree");
        jx.resize(exponents.size());
        jy.resize(exponents.size());
        for (std::size_t t = 0; t < exponents.size(); ++t) {
            jx[t] = exponents[t][0];
            jy[t] = exponents[t][1];
            max_exp = std::max({max_exp, jx[t], jy[t]});
        }
        if (frozen_scale != nullptr)
            scale = *frozen_scale;
        else
            compute_scales();
        const auto u0 = mesh.map.normalize(z0[0], z0[1]);
        c.resize(exponents.size());
        double c_max = 0.0;
        for (std::size_t t = 0; t < exponents.size(); ++t) {
            c[t] = std::pow(u0[0], jx[t]) * std::pow(u0[1], jy[t]) / scale[t];
            c_max = std::max(c_max, std::abs(c[t]));
        }
        c_norm = c_max > 0.0 ? c_max : 1.0;
        double c_l1 = 0.0;
        for (std::size_t t = 0; t < exponents.size(); ++t) {
            // Unit-max RHS keeps the dual iterates in a sane range (the
            // optimum value comes from the replayed certificate, which a
            // positive RHS scaling does not change).  The graded perturbation
            // isolates ratio-test ties; certificates are replayed against the
            // unperturbed mesh data in solve().
            if (c_max > 0.0) c[t] /= c_max;
            c[t] *= 1.0 + 1e-11 * static_cast<double>(t + 1) / static_cast<double>(num_terms);
            c_l1 += std::abs(c[t]);
        }
        feas_tol = 1e-9 * (1.0 + c_l1);
        price.resize(static_cast<std::size_t>(num_points));
    }

    void compute_scales() { scale = compute_column_scales(mesh, jx, jy, max_exp); }

    // Scaled monomial column phi(x_i) (without the sign).
    void fill_phi(int point, std::vector<double>& out) const {
        const double x = mesh.nx[static_cast<std::size_t>(point)];
        const double yv = mesh.ny[static_cast<std::size_t>(point)];
        std::vector<double> px(static_cast<std::size_t>(max_exp) + 1, 1.0);
        std::vector<double> py(static_cast<std::size_t>(max_exp) + 1, 1.0);
        for (int e = 1; e <= max_exp; ++e) {
            px[static_cast<std::size_t>(e)] = px[static_cast<std::size_t>(e - 1)] * x;
            py[static_cast<std::size_t>(e)] = py[static_cast<std::size_t>(e - 1)] * yv;
        }
        out.resize(exponents.size());
        for (std::size_t t = 0; t < exponents.size(); ++t)
            out[t] = px[static_cast<std::size_t>(jx[t])] * py[static_cast<std::size_t>(jy[t])] /
                     scale[t];
    }

    bool is_artificial(int col) const { return col >= 2 * num_points; }

    void refactor() {
        std::vector<double> b(static_cast<std::size_t>(num_terms) *
                              static_cast<std::size_t>(num_terms), 0.0);
        std::vector<double> phi;
        for (int p = 0; p < num_terms; ++p) {
            const int col = basis[static_cast<std::size_t>(p)];
            double* dst = b.data() + static_cast<std::size_t>(p) * static_cast<std::size_t>(num_terms);
            if (is_artificial(col)) {
                const int r = col - 2 * num_points;
                dst[r] = c[static_cast<std::size_t>(r)] < 0.0 ? -1.0 : 1.0;
            } else {
                fill_phi(col / 2, phi);
                const double sgn = (col % 2 == 0) ? 1.0 : -1.0;
                for (int t = 0; t < num_terms; ++t) dst[t] = sgn * phi[static_cast<std::size_t>(t)];
            }
        }
        lu.factor(std::move(b), num_terms);
        y = lu.solve(c);
    }

    // Pricing pass: price[i] = sum_t w_t u_i^{J_t} with w = pi / scale.
    void run_pricing(const std::vector<double>& pi) {
        std::vector<double> w(exponents.size());
        for (std::size_t t = 0; t < exponents.size(); ++t) w[t] = pi[t] / scale[t];
        poly_dot_batch(mesh.nx.data(), mesh.ny.data(), static_cast<std::size_t>(num_points),
                       jx.data(), jy.data(), w.data(), exponents.size(), max_exp, price.data());
    }

    double artificial_abs_sum() const {
        double s = 0.0;
        for (int p = 0; p < num_terms; ++p)
            if (is_artificial(basis[static_cast<std::size_t>(p)]))
                s += std::abs(y[static_cast<std::size_t>(p)]);
        return s;
    }

    // One simplex phase; returns final pi.  threshold is the pricing cutoff
    // (0 for phase 1, 1 for phase 2).
    std::vector<double> run_phase(int phase) {
        std::vector<double> cost(static_cast<std::size_t>(num_terms));
        auto fill_cost = [&] {
            for (int p = 0; p < num_terms; ++p) {
                const bool art = is_artificial(basis[static_cast<std::size_t>(p)]);
                cost[static_cast<std::size_t>(p)] =
                    phase == 1 ? (art ? 1.0 : 0.0) : (art ? 0.0 : 1.0);
            }
        };
        const double threshold = phase == 1 ? kPriceTol : 1.0 + kDualFeasTol;
        const bool trace = std::getenv("PLURIPOT_LP_TRACE") != nullptr;
        double prev_obj = std::numeric_limits<double>::infinity();
        int stall = 0;
        int perturb_level = 0;
        bool bland = false;
        long bland_iters = 0, blocked_total = 0;
        // Devex reference weights (approximate steepest edge).  Raw Dantzig
        // pricing drowns in near-duplicate mesh columns whose reduced cost is
        // large but whose direction is nearly dependent on the basis; scoring
        // price^2 / w with w ~ ||B^-1 A_j||^2 picks productive directions.
        std::vector<double> devex(static_cast<std::size_t>(num_points), 1.0);
        std::vector<double> pi;
        std::vector<double> phi, col(static_cast<std::size_t>(num_terms));
        std::vector<char> blocked(static_cast<std::size_t>(num_points), 0);
        // Points whose column is basic are never entering candidates: their
        // reduced costs are exactly 0 (own sign) and 2 (opposite sign), but
        // rounding can push the computed price a hair past the eligibility
        // threshold, which would make the column re-enter and replace itself
        // in an infinite loop.
        std::vector<char> basic_point(static_cast<std::size_t>(num_points), 0);
        while (true) {
            std::fill(basic_point.begin(), basic_point.end(), 0);
            for (int p = 0; p < num_terms; ++p) {
                const int colid = basis[static_cast<std::size_t>(p)];
                if (!is_artificial(colid))
                    basic_point[static_cast<std::size_t>(colid / 2)] = 1;
            }
            if (++iterations > kIterationCap) {
                if (trace)
                    std::fprintf(stderr,
                                 "[lp] CAP phase=%d prev_obj=%.15e stall=%d bland=%d "
                                 "bland_iters=%ld blocked_total=%ld art=%.3e\n",
                                 phase, prev_obj, stall, static_cast<int>(bland), bland_iters,
                                 blocked_total, artificial_abs_sum());
                throw LPError("simplex iteration cap exceeded");
            }
            fill_cost();
            pi = lu.solve_transpose(cost);
            if (phase == 1 && artificial_abs_sum() <= feas_tol) return pi;
            run_pricing(pi);
            double tr_excess = 0.0, tr_ymin = 0.0;
            int tr_nneg = 0;
            if (trace) {
                for (int i = 0; i < num_points; ++i)
                    tr_excess = std::max(tr_excess, std::abs(price[static_cast<std::size_t>(i)]));
                tr_excess = tr_excess / threshold - 1.0;
                for (int p = 0; p < num_terms; ++p) {
                    tr_ymin = std::min(tr_ymin, y[static_cast<std::size_t>(p)]);
                    if (y[static_cast<std::size_t>(p)] < -1e-9) ++tr_nneg;
                }
            }

            std::fill(blocked.begin(), blocked.end(), 0);
            bool pivoted = false;
            while (!pivoted) {
                int enter_point = -1;
                double enter_sign = 1.0;
                if (!bland) {
                    double best_score = 0.0;
                    for (int i = 0; i < num_points; ++i) {
                        if (blocked[static_cast<std::size_t>(i)] ||
                            basic_point[static_cast<std::size_t>(i)])
                            continue;
                        const double v = std::abs(price[static_cast<std::size_t>(i)]);
                        if (v <= threshold) continue;
                        const double score = v * v / devex[static_cast<std::size_t>(i)];
                        if (score > best_score) {
                            best_score = score;
                            enter_point = i;
                            enter_sign = price[static_cast<std::size_t>(i)] < 0.0 ? -1.0 : 1.0;
                        }
                    }
                } else {
                    for (int i = 0; i < num_points && enter_point < 0; ++i) {
                        if (blocked[static_cast<std::size_t>(i)] ||
                            basic_point[static_cast<std::size_t>(i)])
                            continue;
                        if (price[static_cast<std::size_t>(i)] > threshold) {
                            enter_point = i;
                            enter_sign = 1.0;
                        } else if (-price[static_cast<std::size_t>(i)] > threshold) {
                            enter_point = i;
                            enter_sign = -1.0;
                        }
                    }
                }
                // No entering column: optimal (or only numerically dependent
                // directions remain; the replay in solve() keeps the result a
                // certified lower bound either way).
                if (enter_point < 0) return pi;

                fill_phi(enter_point, phi);
                for (int t = 0; t < num_terms; ++t)
                    col[static_cast<std::size_t>(t)] =
                        enter_sign * phi[static_cast<std::size_t>(t)];
                const auto d = lu.solve(col);

                int leave = -1;
                if (!bland) {
                    // Harris two-pass ratio test: relax the minimum ratio by a
                    // feasibility tolerance, then take the largest pivot among
                    // qualifying rows to protect basis conditioning.  The
                    // relaxation widens while the objective stalls (degenerate
                    // vertex) so steps grow until progress registers again.
                    const double relax = 1e-9 * (1.0 + static_cast<double>(stall));
                    double t_max = std::numeric_limits<double>::infinity();
                    double d_max = 0.0;
                    for (int p = 0; p < num_terms; ++p) {
                        const double dp = d[static_cast<std::size_t>(p)];
                        d_max = std::max(d_max, std::abs(dp));
                        if (dp <= kPivotTol) continue;
                        const double yp = std::max(y[static_cast<std::size_t>(p)], 0.0);
                        t_max = std::min(
                            t_max, (yp + relax * (1.0 + yp)) / dp);
                    }
                    if (!std::isfinite(t_max))
                        throw LPError("unbounded simplex step (mesh conditioning)");
                    double best_piv = 0.0;
                    for (int p = 0; p < num_terms; ++p) {
                        const double dp = d[static_cast<std::size_t>(p)];
                        if (dp <= kPivotTol) continue;
                        if (std::max(y[static_cast<std::size_t>(p)], 0.0) / dp > t_max)
                            continue;
                        if (dp > best_piv) {
                            best_piv = dp;
                            leave = p;
                        }
                    }
                    if (leave < 0 || best_piv < 1e-8 * std::max(1.0, d_max)) {
                        blocked[static_cast<std::size_t>(enter_point)] = 1;
                        ++blocked_total;
                        continue;  // direction numerically dependent; next candidate
                    }
                } else {
                    // Exact Bland rule: minimum ratio, ties by smallest basis
                    // column id (anti-cycling).
                    double best_ratio = std::numeric_limits<double>::infinity();
                    for (int p = 0; p < num_terms; ++p) {
                        const double dp = d[static_cast<std::size_t>(p)];
                        if (dp <= kPivotTol) continue;
                        const double r = std::max(y[static_cast<std::size_t>(p)], 0.0) / dp;
                        if (r < best_ratio ||
                            (r == best_ratio && leave >= 0 &&
                             basis[static_cast<std::size_t>(p)] <
                                 basis[static_cast<std::size_t>(leave)])) {
                            best_ratio = r;
                            leave = p;
                        }
                    }
                    if (leave < 0)
                        throw LPError("unbounded simplex step (mesh conditioning)");
                }
                if (!bland) {
                    // Weight update needs alpha = row `leave` of B^-1 A over
                    // all points, with the pre-pivot basis: one transpose
                    // solve plus a pricing pass (price[] is rebuilt at the
                    // top of the next iteration, so clobbering it is safe).
                    std::vector<double> er(static_cast<std::size_t>(num_terms), 0.0);
                    er[static_cast<std::size_t>(leave)] = 1.0;
                    const auto ar = lu.solve_transpose(er);
                    run_pricing(ar);
                    const double aq = d[static_cast<std::size_t>(leave)];
                    const double wq = std::max(devex[static_cast<std::size_t>(enter_point)], 1.0);
                    const double inv_aq2 = 1.0 / (aq * aq);
                    double w_max = 0.0;
                    for (int i = 0; i < num_points; ++i) {
                        const double ai = price[static_cast<std::size_t>(i)];
                        const double cand = ai * ai * inv_aq2 * wq;
                        if (cand > devex[static_cast<std::size_t>(i)])
                            devex[static_cast<std::size_t>(i)] = cand;
                        w_max = std::max(w_max, devex[static_cast<std::size_t>(i)]);
                    }
                    const int lcol = basis[static_cast<std::size_t>(leave)];
                    if (!is_artificial(lcol))
                        devex[static_cast<std::size_t>(lcol / 2)] = std::max(wq * inv_aq2, 1.0);
                    // Reference framework reset once weights drift too far.
                    if (w_max > 1e10) std::fill(devex.begin(), devex.end(), 1.0);
                }
                if (trace && stall >= 900 && stall <= 1000 && stall % 20 == 0) {
                    const double dl = d[static_cast<std::size_t>(leave)];
                    double dmx = 0.0;
                    for (int p = 0; p < num_terms; ++p)
                        dmx = std::max(dmx, std::abs(d[static_cast<std::size_t>(p)]));
                    std::fprintf(stderr,
                                 "[pv] it=%d st=%d bl=%d ent=%d pr=%.3e lv=%d ylv=%.3e "
                                 "dlv=%.3e dmax=%.3e t=%.3e\n",
                                 iterations, stall, static_cast<int>(bland), enter_point,
                                 price[static_cast<std::size_t>(enter_point)], leave,
                                 y[static_cast<std::size_t>(leave)], dl, dmx,
                                 std::max(y[static_cast<std::size_t>(leave)], 0.0) / dl);
                }
                basis[static_cast<std::size_t>(leave)] =
                    enter_sign > 0.0 ? 2 * enter_point : 2 * enter_point + 1;
                refactor();
                pivoted = true;
            }

            double obj = 0.0;
            for (int p = 0; p < num_terms; ++p) {
                const bool art = is_artificial(basis[static_cast<std::size_t>(p)]);
                const bool counted = phase == 1 ? art : !art;
                if (counted) obj += y[static_cast<std::size_t>(p)];
            }
            if (obj > prev_obj - 1e-13 * (1.0 + std::abs(prev_obj)))
                ++stall;
            else
                stall = 0;
            prev_obj = std::min(prev_obj, obj);
            if (stall >= kStallLimit && std::getenv("PLURIPOT_LP_NOBLAND") == nullptr)
                bland = true;
            if (bland) ++bland_iters;
            if (bland && stall == 0) bland = false;
            if (stall >= 10 * kStallLimit) {
                // Deep degenerate stall: the vertex has many (near-)zero basic
                // values and every improving direction is blocked by one of
                // them.  An additive random perturbation of the RHS displaces
                // all of them generically, which a structured ramp does not.
                // The certificate replay at the end of solve() is against
                // unperturbed data, so this only changes the pivot path.
                if (++perturb_level > 6) {
                    // Escalations exhausted.  If the remaining reduced costs
                    // are already down in the noise plateau the vertex is
                    // optimal for practical purposes; return it (the replay
                    // in solve() certifies whatever we return).  Only a large
                    // remaining excess is a genuine failure.
                    fill_cost();
                    pi = lu.solve_transpose(cost);
                    run_pricing(pi);
                    double pmax = 0.0;
                    for (int i = 0; i < num_points; ++i)
                        pmax = std::max(pmax, std::abs(price[static_cast<std::size_t>(i)]));
                    if (phase == 2 && pmax <= 1.0 + 1e-4) return pi;
                    if (trace)
                        std::fprintf(stderr, "[lp] STUCK phase=%d pmax=%.6e obj=%.6e\n", phase,
                                     pmax, prev_obj);
                    throw LPError("persistent degenerate cycling in simplex");
                }
                const double eps = 1e-9 * std::pow(10.0, perturb_level - 1);
                std::uint64_t s = 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(perturb_level);
                for (std::size_t t = 0; t < c.size(); ++t) {
                    s ^= s << 13;
                    s ^= s >> 7;
                    s ^= s << 17;
                    const double eta =
                        2.0 * (static_cast<double>(s >> 11) * 0x1.0p-53) - 1.0;
                    c[t] += eps * eta;
                }
                y = lu.solve(c);
                prev_obj = std::numeric_limits<double>::infinity();
                stall = 0;
                bland = false;
            }
            if (trace && iterations % 2000 == 0)
                std::fprintf(stderr,
                             "[lp] phase=%d iter=%d obj=%.15e stall=%d bland=%d "
                             "bland_iters=%ld blocked_total=%ld art=%.3e "
                             "excess=%.3e ymin=%.3e nneg=%d\n",
                             phase, iterations, obj, stall, static_cast<int>(bland),
                             bland_iters, blocked_total, artificial_abs_sum(),
                             tr_excess, tr_ymin, tr_nneg);
        }
    }

    void drive_out_artificials() {
        std::vector<double> e(static_cast<std::size_t>(num_terms), 0.0);
        for (int p = 0; p < num_terms; ++p) {
            if (!is_artificial(basis[static_cast<std::size_t>(p)])) continue;
            std::fill(e.begin(), e.end(), 0.0);
            e[static_cast<std::size_t>(p)] = 1.0;
            const auto w = lu.solve_transpose(e);
            run_pricing(w);
            int best_i = -1;
            double best = kArtificialTol;
            for (int i = 0; i < num_points; ++i) {
                const double v = std::abs(price[static_cast<std::size_t>(i)]);
                if (v > best) {
                    best = v;
                    best_i = i;
                }
            }
            if (best_i < 0) throw LPError("mesh does not span the polynomial space");
            basis[static_cast<std::size_t>(p)] =
                price[static_cast<std::size_t>(best_i)] < 0.0 ? 2 * best_i + 1 : 2 * best_i;
            refactor();
        }
    }

    LPBound solve(std::array<double, 2> z0) {
        basis.resize(static_cast<std::size_t>(num_terms));
        for (int r = 0; r < num_terms; ++r) basis[static_cast<std::size_t>(r)] = 2 * num_points + r;
        refactor();
        run_phase(1);
        double art_sum = 0.0;
        for (int p = 0; p < num_terms; ++p)
            if (is_artificial(basis[static_cast<std::size_t>(p)]))
                art_sum += std::abs(y[static_cast<std::size_t>(p)]);
        if (art_sum > std::max(kArtificialTol, 10.0 * feas_tol))
            throw LPError("phase 1 failed to reach feasibility (residual " +
                          std::to_string(art_sum) + ")");
        drive_out_artificials();
        return finish(z0);
    }

    // Resume phase 2 from a prior optimal basis over a column numbering this
    // mesh extends (exchange rounds append points, so ids stay valid).
    LPBound solve_warm(std::array<double, 2> z0, std::vector<int> warm) {
        if (static_cast<int>(warm.size()) != num_terms) throw LPError("warm basis size mismatch");
        for (const int col : warm)
            if (col < 0 || col >= 2 * num_points) throw LPError("warm basis out of range");
        basis = std::move(warm);
        refactor();
        for (int p = 0; p < num_terms; ++p)
            if (y[static_cast<std::size_t>(p)] < -1e-6) throw LPError("stale warm basis");
        return finish(z0);
    }

    LPBound finish(std::array<double, 2> z0) {
        const auto pi = run_phase(2);

        LPBound bound;
        bound.degree = n_degree;
        bound.mesh_size = num_points;
        bound.exponents = exponents;
        bound.iterations = iterations;
        bound.certificate.resize(exponents.size());
        for (std::size_t t = 0; t < exponents.size(); ++t)
            bound.certificate[t] = pi[t] / scale[t];

        // Certificate replay: rescale to exact mesh feasibility, then price z0.
        run_pricing_raw(bound.certificate);
        double mesh_max = 0.0;
        for (int i = 0; i < num_points; ++i)
            mesh_max = std::max(mesh_max, std::abs(price[static_cast<std::size_t>(i)]));
        if (mesh_max > 1.0)
            for (auto& b : bound.certificate) b /= mesh_max;
        bound.mesh_max_abs = std::min(mesh_max, 1.0);

        const auto u0 = mesh.map.normalize(z0[0], z0[1]);
        double p0 = 0.0;
        poly_dot_batch(&u0[0], &u0[1], 1, jx.data(), jy.data(), bound.certificate.data(),
                       exponents.size(), max_exp, &p0);
        if (p0 == 0.0) throw LPError("degenerate optimum (p(z0) = 0)");
        double value = std::log(std::abs(p0)) / static_cast<double>(n_degree);
        if (value < 0.0 && value >= -1e-7) value = 0.0;
        bound.value = value;
        return bound;
    }

    // Pricing with unscaled weights (certificate coefficients).
    void run_pricing_raw(const std::vector<double>& w) {
        poly_dot_batch(mesh.nx.data(), mesh.ny.data(), static_cast<std::size_t>(num_points),
                       jx.data(), jy.data(), w.data(), exponents.size(), max_exp, price.data());
    }
};

void require_normalized(const Mesh& mesh) {
    if (mesh.nx.size() != mesh.points.size() || mesh.ny.size() != mesh.points.size())
        throw LPError("mesh is missing normalized coordinates");
}

// Exchange (cutting-plane) outer loop: dense meshes contain thousands of
// near-duplicate columns, which drags the simplex through a long tail of
// hair-width improving pivots.  Solving on a small active subset and adding
// the worst full-mesh violators of the subset certificate reaches the same
// optimum in a few rounds; each round must admit a new point, so the loop is
// finite, and the final certificate is rescaled against the full mesh so the
// returned value stays a certified lower bound.
constexpr double kExchangeFeasTol = 1e-12;
constexpr int kExchangeRounds = 200;

Mesh submesh(const Mesh& mesh, const std::vector<int>& idx) {
    Mesh sub;
    sub.dim = mesh.dim;
    sub.degree_hint = mesh.degree_hint;
    sub.spacing = mesh.spacing;
    sub.map = mesh.map;
    sub.points.reserve(idx.size());
    sub.nx.reserve(idx.size());
    sub.ny.reserve(idx.size());
    for (const int i : idx) {
        sub.points.push_back(mesh.points[static_cast<std::size_t>(i)]);
        sub.nx.push_back(mesh.nx[static_cast<std::size_t>(i)]);
        sub.ny.push_back(mesh.ny[static_cast<std::size_t>(i)]);
    }
    return sub;
}

LPBound solve_by_exchange(const Mesh& mesh, const LatticeSpec& lattice, int n,
                          std::array<double, 2> z0) {
    const auto exps = lattice.enumerate(n);
    const int num_terms = static_cast<int>(exps.size());
    const int m = static_cast<int>(mesh.points.size());
    const int seed = std::max(4 * num_terms, 512);
    if (std::getenv("PLURIPOT_LP_TRACE") != nullptr)
        std::fprintf(stderr, "[xc] enter m=%d terms=%d seed=%d direct=%d\n", m, num_terms,
                     seed, static_cast<int>(m <= 2 * seed));
    if (m <= 2 * seed) {
        DualSimplex simplex(mesh, lattice, n, z0);
        return simplex.solve(z0);
    }

    std::vector<int> jx(exps.size()), jy(exps.size());
    int max_exp = 0;
    for (std::size_t t = 0; t < exps.size(); ++t) {
        jx[t] = exps[t][0];
        jy[t] = exps[t][1];
        max_exp = std::max({max_exp, jx[t], jy[t]});
    }

    std::vector<int> scale_argmax;
    const std::vector<double> frozen_scale =
        compute_column_scales(mesh, jx, jy, max_exp, &scale_argmax);
    if (std::getenv("PLURIPOT_LP_TRACE") != nullptr) {
        std::fprintf(stderr, "[xc] nx_size=%zu argmax:", mesh.nx.size());
        for (std::size_t t = 0; t < scale_argmax.size() && t < 8; ++t)
            std::fprintf(stderr, " %d(%.2e)", scale_argmax[t], frozen_scale[t]);
        std::fprintf(stderr, "\n");
    }

    std::vector<int> active;
    active.reserve(static_cast<std::size_t>(seed) + 64);
    std::vector<char> in_active(static_cast<std::size_t>(m), 0);
    // Seed with each column's scale-defining point (so every scaled column
    // keeps a unit-size entry in the subset; without these the seed basis can
    // be catastrophically ill-conditioned), then a uniform stride sample.
    for (const int i : scale_argmax) {
        if (!in_active[static_cast<std::size_t>(i)]) {
            in_active[static_cast<std::size_t>(i)] = 1;
            active.push_back(i);
        }
    }
    for (int k = 0; k < seed; ++k) {
        const int i = static_cast<int>(static_cast<long long>(k) * m / seed);
        if (!in_active[static_cast<std::size_t>(i)]) {
            in_active[static_cast<std::size_t>(i)] = 1;
            active.push_back(i);
        }
    }
    std::vector<double> price(static_cast<std::size_t>(m));
    std::vector<std::pair<double, int>> violators;
    std::vector<int> warm_basis;
    int total_iterations = 0;
    const bool trace = std::getenv("PLURIPOT_LP_TRACE") != nullptr;
    if (trace) std::fprintf(stderr, "[xc] seeded active=%zu\n", active.size());
    for (int round = 0; round < kExchangeRounds; ++round) {
        const Mesh sub = submesh(mesh, active);
        DualSimplex simplex(sub, lattice, n, z0, &frozen_scale);
        LPBound bound;
        bool warmed = false;
        if (!warm_basis.empty()) {
            try {
                bound = simplex.solve_warm(z0, warm_basis);
                warmed = true;
            } catch (const LPError&) {
            }
        }
        if (!warmed) bound = simplex.solve(z0);
        warm_basis = simplex.basis;
        total_iterations += bound.iterations;

        poly_dot_batch(mesh.nx.data(), mesh.ny.data(), static_cast<std::size_t>(m), jx.data(),
                       jy.data(), bound.certificate.data(), exps.size(), max_exp, price.data());
        double vmax = 0.0;
        violators.clear();
        for (int i = 0; i < m; ++i) {
            const double v = std::abs(price[static_cast<std::size_t>(i)]);
            vmax = std::max(vmax, v);
            if (v > 1.0 + kExchangeFeasTol && !in_active[static_cast<std::size_t>(i)])
                violators.emplace_back(v, i);
        }
        if (trace)
            std::fprintf(stderr, "[xc] round=%d active=%zu sub_iters=%d vmax-1=%.3e nviol=%zu\n",
                         round, active.size(), bound.iterations, vmax - 1.0, violators.size());
        if (vmax > 1.0 + kExchangeFeasTol && !violators.empty()) {
            std::sort(violators.begin(), violators.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
            });
            // One representative per violation bump: greedy in descending
            // violation order, skipping candidates near an accepted one, so
            // the active set grows by distinct features instead of clumps of
            // near-duplicate neighbours.
            const double r_min = 3.0 * mesh.spacing;
            const double r2 = r_min * r_min;
            const std::size_t cap = static_cast<std::size_t>(4 * num_terms);
            std::vector<std::array<double, 2>> accepted;
            accepted.reserve(cap);
            std::size_t added = 0;
            for (const auto& [v, i] : violators) {
                if (added >= cap) break;
                const auto& p = mesh.points[static_cast<std::size_t>(i)];
                bool close = false;
                for (const auto& q : accepted) {
                    const double dx = p[0] - q[0];
                    const double dy = p[1] - q[1];
                    if (dx * dx + dy * dy < r2) {
                        close = true;
                        break;
                    }
                }
                if (close) continue;
                accepted.push_back(p);
                in_active[static_cast<std::size_t>(i)] = 1;
                active.push_back(i);
                ++added;
            }
            continue;
        }

        // Feasible on the full mesh (or violator-free up to evaluation noise):
        // rescale and finalize against the full mesh.
        if (vmax > 1.0)
            for (auto& bc : bound.certificate) bc /= vmax;
        bound.mesh_max_abs = std::min(vmax, 1.0);
        bound.mesh_size = m;
        bound.iterations = total_iterations;
        const auto u0 = mesh.map.normalize(z0[0], z0[1]);
        double p0 = 0.0;
        poly_dot_batch(&u0[0], &u0[1], 1, jx.data(), jy.data(), bound.certificate.data(),
                       exps.size(), max_exp, &p0);
        if (p0 == 0.0) throw LPError("degenerate optimum (p(z0) = 0)");
        double value = std::log(std::abs(p0)) / static_cast<double>(n);
        if (value < 0.0 && value >= -1e-7) value = 0.0;
        bound.value = value;
        return bound;
    }
    throw LPError("exchange rounds exhausted without full-mesh feasibility");
}

}  // namespace

nlohmann::json LPBound::to_json() const {
    nlohmann::json cert = nlohmann::json::array();
    for (const double v : certificate) cert.push_back(v);
    return nlohmann::json{{"value", value},
                          {"degree", degree},
                          {"mesh_size", mesh_size},
                          {"certificate", cert}};
}

LPBound lp_lower_bound_on_mesh(const Mesh& mesh, const LatticeSpec& lattice, int n,
                               std::array<double, 2> z0) {
    if (n < 1) throw DomainError("lp_lower_bound: degree must be >= 1");
    lattice.validate();
    require_normalized(mesh);
    if (!std::isfinite(z0[0]) || !std::isfinite(z0[1]))
        throw DomainError("lp_lower_bound: z0 must be finite");
    return solve_by_exchange(mesh, lattice, n, z0);
}

LPBound lp_lower_bound(const SetDescriptor& set, const LatticeSpec& lattice, int n,
                       std::array<double, 2> z0) {
    const Mesh mesh = build_mesh(set, n);
    return lp_lower_bound_on_mesh(mesh, lattice, n, z0);
}

std::vector<LPBound> degree_sweep(const SetDescriptor& set, const LatticeSpec& lattice,
                                  std::array<double, 2> z0, const std::vector<int>& degrees) {
    if (degrees.empty()) throw DomainError("degree_sweep: empty degree list");
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i] <= degrees[i - 1])
            throw DomainError("degree_sweep: degrees must be strictly increasing");
    for (const int d : degrees)
        if (d < 1 || d % degrees.front() != 0)
            throw DomainError("degree_sweep: each degree must be a positive multiple of the smallest");
    const Mesh mesh = build_mesh(set, degrees.back());
    std::vector<LPBound> out;
    out.reserve(degrees.size());
    for (const int d : degrees) out.push_back(lp_lower_bound_on_mesh(mesh, lattice, d, z0));
    return out;
}

double replay_mesh_max(const Mesh& mesh, const LPBound& bound) {
    require_normalized(mesh);
    std::vector<int> jx(bound.exponents.size()), jy(bound.exponents.size());
    int max_exp = 0;
    for (std::size_t t = 0; t < bound.exponents.size(); ++t) {
        jx[t] = bound.exponents[t][0];
        jy[t] = bound.exponents[t][1];
        max_exp = std::max({max_exp, jx[t], jy[t]});
    }
    std::vector<double> vals(mesh.points.size());
    poly_dot_batch(mesh.nx.data(), mesh.ny.data(), mesh.points.size(), jx.data(), jy.data(),
                   bound.certificate.data(), bound.exponents.size(), max_exp, vals.data());
    double m = 0.0;
    for (const double v : vals) m = std::max(m, std::abs(v));
    return m;
}

double replay_value(const Mesh& mesh, const LPBound& bound, std::array<double, 2> z0) {
    const auto u0 = mesh.map.normalize(z0[0], z0[1]);
    std::vector<int> jx(bound.exponents.size()), jy(bound.exponents.size());
    int max_exp = 0;
    for (std::size_t t = 0; t < bound.exponents.size(); ++t) {
        jx[t] = bound.exponents[t][0];
        jy[t] = bound.exponents[t][1];
        max_exp = std::max({max_exp, jx[t], jy[t]});
    }
    double p0 = 0.0;
    poly_dot_batch(&u0[0], &u0[1], 1, jx.data(), jy.data(), bound.certificate.data(),
                   bound.exponents.size(), max_exp, &p0);
    return std::log(std::abs(p0)) / static_cast<double>(bound.degree);
}

}  // namespace pluripot
