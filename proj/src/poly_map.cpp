#include "pluripot/poly_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "pluripot/errors.hpp"

namespace pluripot {

namespace {

using json = nlohmann::json;

// Compensated complex accumulator used for coefficient sums and evaluation.
struct KahanC {
    Complex sum{0.0, 0.0};
    Complex comp{0.0, 0.0};
    void add(const Complex& v) {
        const Complex y = v - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

std::vector<Complex> power_table(const Complex& z, int max_exp) {
    std::vector<Complex> p(static_cast<std::size_t>(max_exp) + 1);
    p[0] = Complex(1.0, 0.0);
    for (int i = 1; i <= max_exp; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * z;
    return p;
}

std::vector<PolyTerm> normalize_terms(const std::map<std::pair<int, int>, KahanC>& acc) {
    std::vector<PolyTerm> out;
    for (const auto& [jk, v] : acc) {
        if (v.sum == Complex(0.0, 0.0)) continue;
        out.push_back(PolyTerm{jk.first, jk.second, v.sum});
    }
    return out;
}

// Component-wise polynomial product of coefficient lists.
std::vector<PolyTerm> poly_mul(const std::vector<PolyTerm>& p, const std::vector<PolyTerm>& q) {
    std::map<std::pair<int, int>, KahanC> acc;
    for (const auto& a : p)
        for (const auto& b : q) acc[{a.j + b.j, a.k + b.k}].add(a.c * b.c);
    return normalize_terms(acc);
}

void poly_scale_add(std::map<std::pair<int, int>, KahanC>& acc,
                    const std::vector<PolyTerm>& p, const Complex& s) {
    for (const auto& t : p) acc[{t.j, t.k}].add(s * t.c);
}

PolyMap2 make_map(std::vector<PolyTerm> c1, std::vector<PolyTerm> c2, double a, int b) {
    PolyMap2 f;
    f.components[0] = std::move(c1);
    f.components[1] = std::move(c2);
    f.a = a;
    f.b = b;
    f.validate();
    return f;
}

}  // namespace

CPoint2 PolyMap2::eval(const CPoint2& z) const {
    const int deg = std::max(1, max_total_degree());
    const auto p1 = power_table(z.z1, deg);
    const auto p2 = power_table(z.z2, deg);
    CPoint2 out;
    for (int comp = 0; comp < 2; ++comp) {
        KahanC acc;
        for (const auto& t : components[static_cast<std::size_t>(comp)])
            acc.add(t.c * p1[static_cast<std::size_t>(t.j)] * p2[static_cast<std::size_t>(t.k)]);
        (comp == 0 ? out.z1 : out.z2) = acc.sum;
    }
    return out;
}

int PolyMap2::max_total_degree() const {
    int deg = 0;
    for (const auto& comp : components)
        for (const auto& t : comp) deg = std::max(deg, t.j + t.k);
    return deg;
}

void PolyMap2::validate() const {
    for (const auto& comp : components)
        for (const auto& t : comp)
            if (t.j < 0 || t.k < 0) throw DescriptorError("PolyMap2: negative exponent");
    if (b != max_total_degree()) throw DescriptorError("PolyMap2: declared degree b mismatch");
    if (!(a > 0.0)) throw DescriptorError("PolyMap2: growth exponent a must be positive");
    if (a > static_cast<double>(b) + 1e-12)
        throw DescriptorError("PolyMap2: growth exponent a exceeds degree b");
}

nlohmann::json PolyMap2::to_json() const {
    json comps = json::array();
    for (const auto& comp : components) {
        json terms = json::array();
        for (const auto& t : comp)
            terms.push_back({{"j", t.j}, {"k", t.k}, {"re", t.c.real()}, {"im", t.c.imag()}});
        comps.push_back(terms);
    }
    return json{{"components", comps}, {"a", a}, {"b", b}};
}

PolyMap2 PolyMap2::from_json(const nlohmann::json& j) {
    try {
        PolyMap2 f;
        const auto& comps = j.at("components");
        if (!comps.is_array() || comps.size() != 2)
            throw DescriptorError("PolyMap2: components must be a 2-element array");
        for (std::size_t i = 0; i < 2; ++i) {
            for (const auto& term : comps.at(i)) {
                PolyTerm t;
                t.j = term.at("j").get<int>();
                t.k = term.at("k").get<int>();
                t.c = Complex(term.at("re").get<double>(), term.at("im").get<double>());
                f.components[i].push_back(t);
            }
        }
        f.a = j.at("a").get<double>();
        f.b = j.at("b").get<int>();
        f.validate();
        return f;
    } catch (const json::exception& e) {
        throw DescriptorError(std::string("PolyMap2: malformed JSON: ") + e.what());
    }
}

PolyMap2 identity_map() {
    return make_map({{1, 0, Complex(1.0, 0.0)}}, {{0, 1, Complex(1.0, 0.0)}}, 1.0, 1);
}

const std::map<std::string, PolyMap2>& builtin_maps() {
    static const std::map<std::string, PolyMap2> maps = [] {
        std::map<std::string, PolyMap2> m;
        const double r = 1.0 / std::sqrt(2.0);
        m.emplace("T1", make_map({{1, 0, Complex(r, 0.0)}, {0, 1, Complex(-r, 0.0)}},
                                 {{1, 0, Complex(r, 0.0)}, {0, 1, Complex(r, 0.0)}}, 1.0, 1));
        m.emplace("Qmap", make_map({{2, 0, Complex(1.0, 0.0)}}, {{0, 2, Complex(1.0, 0.0)}},
                                   2.0, 2));
        m.emplace("T2", make_map({{1, 0, Complex(2.0, 0.0)}},
                                 {{1, 0, Complex(-1.0, 0.0)}, {0, 1, Complex(1.0, 0.0)}}, 1.0,
                                 1));
        m.emplace("G", make_map({{2, 0, Complex(1.0, 0.0)},
                                 {1, 1, Complex(-2.0, 0.0)},
                                 {0, 2, Complex(1.0, 0.0)}},
                                {{1, 1, Complex(2.0, 0.0)}}, 2.0, 2));
        m.emplace("F_pac",
                  make_map({{1, 0, Complex(1.0, 0.0)}}, {{0, 2, Complex(1.0, 0.0)}}, 1.0, 2));
        return m;
    }();
    return maps;
}

PolyMap2 compose(const PolyMap2& f, const PolyMap2& g) {
    f.validate();
    g.validate();
    if (static_cast<long>(f.b) * static_cast<long>(g.b) > kComposeDegreeCap)
        throw DomainError("compose: composite degree exceeds cap 64");

    PolyMap2 out;
    for (int comp = 0; comp < 2; ++comp) {
        // Substitute g's components into each monomial of f's component.
        std::map<std::pair<int, int>, KahanC> acc;
        // Cache powers of g1, g2 as polynomials.
        std::vector<std::vector<PolyTerm>> g1p{{PolyTerm{0, 0, Complex(1.0, 0.0)}}};
        std::vector<std::vector<PolyTerm>> g2p{{PolyTerm{0, 0, Complex(1.0, 0.0)}}};
        auto power_of = [&](std::vector<std::vector<PolyTerm>>& cache,
                            const std::vector<PolyTerm>& base, int e) -> const std::vector<PolyTerm>& {
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(poly_mul(cache.back(), base));
            return cache[static_cast<std::size_t>(e)];
        };
        for (const auto& t : f.components[static_cast<std::size_t>(comp)]) {
            const auto& pj = power_of(g1p, g.components[0], t.j);
            const auto& pk = power_of(g2p, g.components[1], t.k);
            const auto prod = poly_mul(pj, pk);
            poly_scale_add(acc, prod, t.c);
        }
        out.components[static_cast<std::size_t>(comp)] = normalize_terms(acc);
    }
    out.a = f.a * g.a;
    out.b = out.max_total_degree();
    out.validate();
    return out;
}

double map_coeff_distance(const PolyMap2& f, const PolyMap2& g) {
    double worst = 0.0;
    for (int comp = 0; comp < 2; ++comp) {
        std::map<std::pair<int, int>, Complex> diff;
        for (const auto& t : f.components[static_cast<std::size_t>(comp)]) diff[{t.j, t.k}] += t.c;
        for (const auto& t : g.components[static_cast<std::size_t>(comp)]) diff[{t.j, t.k}] -= t.c;
        for (const auto& [jk, c] : diff) worst = std::max(worst, std::abs(c));
    }
    return worst;
}

std::pair<double, double> sandwich(const std::function<double(const CPoint2&)>& v_model,
                                   const PolyMap2& F, const CPoint2& z) {
    const double val = v_model(F.eval(z));
    return {val / static_cast<double>(F.b), val / F.a};
}

double properness_min_ratio(const PolyMap2& F, double radius, int n_samples, Rng& rng) {
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_samples; ++i) {
        std::array<double, 4> v{};
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& c : v) {
                c = rng.uniform(-1.0, 1.0);
                norm2 += c * c;
            }
        } while (norm2 < 1e-12);
        const double scale = radius / std::sqrt(norm2);
        const CPoint2 z{Complex(v[0] * scale, v[1] * scale), Complex(v[2] * scale, v[3] * scale)};
        const CPoint2 w = F.eval(z);
        const double wnorm = std::sqrt(std::norm(w.z1) + std::norm(w.z2));
        worst = std::min(worst, wnorm / std::pow(radius, F.a));
    }
    return worst;
}

}  // namespace pluripot
