#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pluripot/complex_analysis.hpp"
#include "pluripot/util.hpp"

namespace pluripot {

inline constexpr int kComposeDegreeCap = 64;

struct PolyTerm {
    int j = 0;  // exponent of z1
    int k = 0;  // exponent of z2
    Complex c{0.0, 0.0};
};

// Polynomial self-map of C^2 with declared growth exponent a and total
// degree b (a <= b; b equals the max total degree of the two components).
struct PolyMap2 {
    std::array<std::vector<PolyTerm>, 2> components;
    double a = 1.0;
    int b = 1;

    CPoint2 eval(const CPoint2& z) const;
    int max_total_degree() const;
    void validate() const;  // throws DescriptorError on broken invariants

    nlohmann::json to_json() const;
    static PolyMap2 from_json(const nlohmann::json& j);  // throws DescriptorError
};

PolyMap2 identity_map();

// T1 (rotation by +45 degrees), Qmap (coordinate squares), T2 (linear),
// G = T2 o Qmap o T1, F_pac (z,w) -> (z, w^2).
const std::map<std::string, PolyMap2>& builtin_maps();

// f o g with exact coefficient arithmetic (Kahan-compensated accumulation);
// declared a and b multiply.  Composite degree above kComposeDegreeCap throws
// DomainError.
PolyMap2 compose(const PolyMap2& f, const PolyMap2& g);

// Max |coefficient difference| over the union of exponents of both maps.
double map_coeff_distance(const PolyMap2& f, const PolyMap2& g);

// (lo, hi) = (v_model(F(z))/b, v_model(F(z))/a); brackets the extremal
// function of the preimage set, collapsing when a == b.
std::pair<double, double> sandwich(const std::function<double(const CPoint2&)>& v_model,
                                   const PolyMap2& F, const CPoint2& z);

// min over n_samples random points with ||z|| = radius of ||F(z)|| / ||z||^a;
// positive values support the declared growth exponent.
double properness_min_ratio(const PolyMap2& F, double radius, int n_samples, Rng& rng);

}  // namespace pluripot
