#include "pluripot/complex_analysis.hpp"

#include <cassert>
#include <cmath>

namespace pluripot {

Complex joukowski_h(Complex zeta) {
    const double scale = std::abs(zeta);
    if (scale > 1e100) {
        // Avoid overflow in zeta^2: h = zeta * (1 + sqrt(1 - 1/zeta^2)), and
        // at this magnitude the principal square root is the right branch.
        const Complex inv = 1.0 / zeta;
        return zeta * (1.0 + std::sqrt(1.0 - inv * inv));
    }
    const Complex root = std::sqrt(zeta * zeta - 1.0);
    const Complex hp = zeta + root;
    const Complex hm = zeta - root;
    // The two candidates multiply to 1; pick the one outside the unit disk.
    return std::norm(hp) >= std::norm(hm) ? hp : hm;
}

double green_interval(Complex zeta) {
    const double v = std::log(std::abs(joukowski_h(zeta)));
    return v > 0.0 ? v : 0.0;
}

double acosh_ge1(double x) {
    assert(x >= 1.0 - kGreenArgSnap);
    if (x <= 1.0 + kGreenArgSnap) return 0.0;
    return std::acosh(x);
}

}  // namespace pluripot
