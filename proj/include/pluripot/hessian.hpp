#pragma once

#include <functional>

#include "pluripot/complex_analysis.hpp"

namespace pluripot {

// Complex Hessian (d^2 V / dz_j dz̄_k); Hermitian by construction of the
// finite-difference stencils, so h21 is conj(h12).
struct Hermitian2 {
    double h11 = 0.0;
    double h22 = 0.0;
    Complex h12{0.0, 0.0};

    double det() const;
    double spectral_norm() const;   // largest |eigenvalue|
    double min_eigenvalue() const;  // smallest eigenvalue (matrix is Hermitian)
};

using Evaluator = std::function<double(const CPoint2&)>;

// Central second differences in the four real coordinates (25 evaluations):
//   H_jj = (V_{x_j x_j} + V_{y_j y_j}) / 4
//   H_12 = ((V_{x1 x2} + V_{y1 y2}) + i (V_{x1 y2} - V_{y1 x2})) / 4
// Throws DomainError on non-finite samples or non-positive step.
Hermitian2 complex_hessian_fd(const Evaluator& V, const CPoint2& z, double step);

// Scale-free maximality residual |det H| / (1 + ||H||^2), spectral norm.
double maximality_residual(const Evaluator& V, const CPoint2& z, double step);

}  // namespace pluripot
