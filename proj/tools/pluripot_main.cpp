#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pluripot/approach.hpp"
#include "pluripot/cheb_lp.hpp"
#include "pluripot/closed_forms.hpp"
#include "pluripot/complex_analysis.hpp"
#include "pluripot/errors.hpp"
#include "pluripot/lattice.hpp"
#include "pluripot/sets.hpp"
#include "pluripot/util.hpp"
#include "pluripot/verify.hpp"

namespace {

using namespace pluripot;

SetDescriptor load_set(const std::string& arg) {
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
        std::ifstream in(arg);
        if (!in) throw DescriptorError("cannot open set descriptor file: " + arg);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw DescriptorError(std::string("malformed set descriptor JSON: ") + e.what());
        }
        return SetDescriptor::from_json(j);
    }
    return SetDescriptor::named(arg);
}

CPoint2 parse_point(const std::vector<double>& comps) {
    if (comps.size() == 2) return CPoint2::from_real(comps[0], comps[1]);
    if (comps.size() == 4)
        return CPoint2{Complex(comps[0], comps[1]), Complex(comps[2], comps[3])};
    throw DescriptorError("--point expects 2 (real) or 4 (re,im,re,im) components");
}

int run_eval(const std::string& set_arg, const std::vector<double>& point) {
    const SetDescriptor set = load_set(set_arg);
    const CPoint2 z = parse_point(point);
    const double value = closed_form_value(set, z);
    std::cout << format_double(value) << "\n";

    nlohmann::ordered_json j;
    j["set"] = set.to_json();
    j["point"] = {z.z1.real(), z.z1.imag(), z.z2.real(), z.z2.imag()};
    j["value"] = value;
    if (z.z1.imag() == 0.0 && z.z2.imag() == 0.0) {
        try {
            j["density"] = density_formula(set, z.z1.real(), z.z2.real());
        } catch (const DomainError&) {
            // density undefined here (exterior point, axis, or unsupported set)
        }
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int run_grid(const std::string& set_arg, const std::vector<double>& window, int res,
             const std::string& out, int threads) {
    const SetDescriptor set = load_set(set_arg);
    set.validate();
    if (window.size() != 4) throw DescriptorError("--window expects x0,x1,y0,y1");
    const double x0 = window[0], x1 = window[1], y0 = window[2], y1 = window[3];
    if (!(x1 >= x0) || !(y1 >= y0)) throw DomainError("grid window is empty");
    if (res < 1 || res > 2048) throw DomainError("--res must lie in [1, 2048]");

    const double dx = res > 1 ? (x1 - x0) / (res - 1) : 0.0;
    const double dy = res > 1 ? (y1 - y0) / (res - 1) : 0.0;
    std::vector<std::string> rows(res);
    parallel_for(static_cast<std::size_t>(res), threads, [&](std::size_t iy) {
        const double y = y0 + dy * static_cast<double>(iy);
        std::string row;
        row.reserve(static_cast<std::size_t>(res) * 48);
        for (int ix = 0; ix < res; ++ix) {
            const double x = x0 + dx * ix;
            // The interval's grid is its complex plane (x + iy); 2D sets use
            // the real slice.
            const CPoint2 z = set.kind == SetKind::interval
                                  ? CPoint2{Complex(x, y), Complex(0.0, 0.0)}
                                  : CPoint2::from_real(x, y);
            row += format_double(x);
            row += ',';
            row += format_double(y);
            row += ',';
            row += format_double(closed_form_value(set, z));
            row += '\n';
        }
        rows[iy] = std::move(row);
    });

    std::string csv = "x,y,value\n";
    for (const std::string& row : rows) csv += row;
    write_file_atomic(out, csv);
    return 0;
}

int run_bound(const std::string& set_arg, const std::vector<double>& point,
              const std::string& lattice_arg, std::vector<int> degrees, int degree,
              const std::string& out) {
    const SetDescriptor set = load_set(set_arg);
    const CPoint2 z = parse_point(point);
    if (z.z1.imag() != 0.0 || z.z2.imag() != 0.0)
        throw DomainError("polynomial bounds evaluate at real points only");
    const std::array<double, 2> z0{z.z1.real(), z.z2.real()};

    LatticeSpec lattice;
    if (lattice_arg == "auto")
        lattice = set.dim() == 1 ? LatticeSpec::interval_1d() : LatticeSpec::simplex();
    else if (lattice_arg == "interval")
        lattice = LatticeSpec::interval_1d();
    else if (lattice_arg == "simplex")
        lattice = LatticeSpec::simplex();
    else if (lattice_arg == "pachull")
        lattice = LatticeSpec::pac_hull();
    else
        throw DescriptorError("--lattice must be auto, interval, simplex, or pachull");

    if (degrees.empty()) degrees = degree > 0 ? std::vector<int>{degree} : std::vector<int>{1, 2, 4, 8};
    const std::vector<LPBound> sweep = degree_sweep(set, lattice, z0, degrees);

    nlohmann::ordered_json j;
    j["set"] = set.to_json();
    j["point"] = {z0[0], z0[1]};
    j["lattice"] = lattice_arg;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const LPBound& b : sweep) arr.push_back(nlohmann::ordered_json(b.to_json()));
    j["bounds"] = arr;
    try {
        j["closed_form"] = closed_form_value(set, z);
    } catch (const DomainError&) {
        // no closed form for this set; the LP bounds stand alone
    }
    const std::string text = j.dump(2) + "\n";
    if (!out.empty()) write_file_atomic(out, text);
    std::cout << text;
    return 0;
}

int run_approach(const std::string& target, bool vertical, double linear_c, bool has_c,
                 double m, bool has_m, const std::vector<double>& tangential,
                 const std::string& out) {
    const int selectors = static_cast<int>(vertical) + static_cast<int>(has_c) +
                          static_cast<int>(has_m) + static_cast<int>(!tangential.empty());
    if (selectors != 1)
        throw DescriptorError(
            "pick exactly one of --vertical, --linear-c, --m, --tangential a,N");
    if (!tangential.empty() && tangential.size() != 2)
        throw DescriptorError("--tangential expects a,N");

    ApproachPath path;
    if (target == "pacman") {
        if (has_m) throw DescriptorError("--m applies to --target scorner");
        if (vertical)
            path = ApproachPath::vertical();
        else if (has_c)
            path = ApproachPath::linear(linear_c);
        else
            path = ApproachPath::tangential(tangential[0], tangential[1]);
    } else if (target == "scorner") {
        if (vertical || has_c)
            throw DescriptorError("--target scorner supports --m and --tangential");
        if (has_m)
            path = ApproachPath::scorner_linear_m(m);
        else
            path = ApproachPath::scorner_tangential(tangential[0], tangential[1]);
    } else {
        throw DescriptorError("--target must be pacman or scorner");
    }

    const ApproachResult result = approach_experiment(path);
    if (!out.empty()) write_file_atomic(out, approach_csv(result));
    std::cout << result.fit.to_json().dump() << "\n";
    return 0;
}

int run_verify(std::uint64_t seed, double fd_step, int threads, const std::string& out) {
    VerifyConfig cfg;
    cfg.seed = seed;
    cfg.fd_step = fd_step;
    cfg.threads = threads;
    const nlohmann::ordered_json report = verify_report(cfg);
    const std::string text = report.dump(2) + "\n";
    if (!out.empty()) write_file_atomic(out, text);
    std::cout << text;
    return report_all_pass(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal functions, polynomial lower bounds, and vertex asymptotics"};
    app.require_subcommand(1);

    std::string set_arg, out_path, lattice_arg = "auto", target;
    std::vector<double> point_vals, window_vals, tangential_vals;
    std::vector<int> degrees_vals;
    int res = 256, degree = 0, threads = 0;
    double linear_c = 0.0, m_slope = 0.0, fd_step = 1e-3;
    bool vertical = false;
    std::uint64_t seed = 20260823ULL;

    CLI::App* eval = app.add_subcommand("eval", "evaluate a closed-form extremal function");
    eval->add_option("--set", set_arg, "named set or descriptor JSON file")->required();
    eval->add_option("--point", point_vals, "x,y or x1,y1,x2,y2 (re,im pairs)")
        ->required()
        ->delimiter(',');

    CLI::App* grid = app.add_subcommand("grid", "sample a window of the real slice to CSV");
    grid->add_option("--set", set_arg, "named set or descriptor JSON file")->required();
    grid->add_option("--window", window_vals, "x0,x1,y0,y1")->required()->delimiter(',');
    grid->add_option("--res", res, "points per side (max 2048)");
    grid->add_option("--out", out_path, "output CSV path")->required();
    grid->add_option("--threads", threads, "worker threads (0 = all cores)");

    CLI::App* bound = app.add_subcommand("bound", "LP lower bounds at a real point");
    bound->add_option("--set", set_arg, "named set or descriptor JSON file")->required();
    bound->add_option("--point", point_vals, "x,y (or re,im pairs with zero im)")
        ->required()
        ->delimiter(',');
    bound->add_option("--lattice", lattice_arg, "auto, interval, simplex, or pachull");
    CLI::Option* degs = bound->add_option("--degrees", degrees_vals,
                                          "increasing degrees, multiples of the first")
                            ->delimiter(',');
    bound->add_option("--degree", degree, "single degree")->excludes(degs);
    bound->add_option("--out", out_path, "also write the JSON report here");

    CLI::App* approach = app.add_subcommand("approach", "density limits along approach paths");
    approach->add_option("--target", target, "pacman or scorner")->required();
    approach->add_flag("--vertical", vertical, "straight-down path to the vertex");
    CLI::Option* opt_c =
        approach->add_option("--linear-c", linear_c, "linear slope c (c > 1 or c <= 0)");
    CLI::Option* opt_m = approach->add_option("--m", m_slope, "corner slope m in (0,1]");
    approach->add_option("--tangential", tangential_vals, "a,N tangential curve")
        ->delimiter(',');
    approach->add_option("--out", out_path, "write the sample CSV here");

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--fd-step", fd_step, "finite-difference step");
    verify->add_option("--threads", threads, "worker threads (0 = all cores)");
    verify->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(set_arg, point_vals);
        if (grid->parsed()) return run_grid(set_arg, window_vals, res, out_path, threads);
        if (bound->parsed())
            return run_bound(set_arg, point_vals, lattice_arg, degrees_vals, degree, out_path);
        if (approach->parsed())
            return run_approach(target, vertical, linear_c, static_cast<bool>(*opt_c),
                                m_slope, static_cast<bool>(*opt_m), tangential_vals,
                                out_path);
        if (verify->parsed()) return run_verify(seed, fd_step, threads, out_path);
    } catch (const DescriptorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const LPError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
