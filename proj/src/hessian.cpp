#include "pluripot/hessian.hpp"

#include <cmath>

#include "pluripot/errors.hpp"

namespace pluripot {

namespace {

CPoint2 shifted(const CPoint2& z, int coord, double d) {
    CPoint2 w = z;
    switch (coord) {
        case 0: w.z1 += Complex(d, 0.0); break;
        case 1: w.z1 += Complex(0.0, d); break;
        case 2: w.z2 += Complex(d, 0.0); break;
        default: w.z2 += Complex(0.0, d); break;
    }
    return w;
}

}  // namespace

double Hermitian2::det() const { return h11 * h22 - std::norm(h12); }

double Hermitian2::spectral_norm() const {
    const double mid = 0.5 * (h11 + h22);
    const double rad = std::hypot(0.5 * (h11 - h22), std::abs(h12));
    return std::max(std::abs(mid + rad), std::abs(mid - rad));
}

double Hermitian2::min_eigenvalue() const {
    const double mid = 0.5 * (h11 + h22);
    const double rad = std::hypot(0.5 * (h11 - h22), std::abs(h12));
    return mid - rad;
}

Hermitian2 complex_hessian_fd(const Evaluator& V, const CPoint2& z, double step) {
    if (!(step > 0.0) || !std::isfinite(step))
        throw DomainError("complex_hessian_fd: step must be positive");

    const double h2 = step * step;
    double sample[4][2];   // axis second-difference samples V(z ± h e_c)
    double mixed[4][4]{};  // mixed second differences d^2 V / dc1 dc2, c1 < c2

    const double center = V(z);
    if (!std::isfinite(center)) throw DomainError("complex_hessian_fd: non-finite sample");

    for (int c = 0; c < 4; ++c)
        for (int s = 0; s < 2; ++s) {
            const double v = V(shifted(z, c, s == 0 ? step : -step));
            if (!std::isfinite(v)) throw DomainError("complex_hessian_fd: non-finite sample");
            sample[c][s] = v;
        }

    auto second = [&](int c) { return (sample[c][0] - 2.0 * center + sample[c][1]) / h2; };

    // Only the four cross-coordinate pairs feed H12.
    constexpr int pairs[4][2] = {{0, 2}, {1, 3}, {0, 3}, {1, 2}};
    for (const auto& p : pairs) {
        const int c1 = p[0], c2 = p[1];
        const double pp = V(shifted(shifted(z, c1, step), c2, step));
        const double pm = V(shifted(shifted(z, c1, step), c2, -step));
        const double mp = V(shifted(shifted(z, c1, -step), c2, step));
        const double mm = V(shifted(shifted(z, c1, -step), c2, -step));
        if (!std::isfinite(pp) || !std::isfinite(pm) || !std::isfinite(mp) || !std::isfinite(mm))
            throw DomainError("complex_hessian_fd: non-finite sample");
        mixed[c1][c2] = (pp - pm - mp + mm) / (4.0 * h2);
    }

    Hermitian2 H;
    H.h11 = 0.25 * (second(0) + second(1));
    H.h22 = 0.25 * (second(2) + second(3));
    H.h12 = 0.25 * Complex(mixed[0][2] + mixed[1][3], mixed[0][3] - mixed[1][2]);
    return H;
}

double maximality_residual(const Evaluator& V, const CPoint2& z, double step) {
    const Hermitian2 H = complex_hessian_fd(V, z, step);
    const double nrm = H.spectral_norm();
    return std::abs(H.det()) / (1.0 + nrm * nrm);
}

}  // namespace pluripot
