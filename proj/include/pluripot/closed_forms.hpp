#pragma once

#include "pluripot/complex_analysis.hpp"
#include "pluripot/kernels.hpp"
#include "pluripot/sets.hpp"

namespace pluripot {

struct ExtremalValue {
    double value = 0.0;  // >= 0; zero when `at` lies in the generating compact set
    CPoint2 at;
};

// log h(|z1| + |z2| + |z1+z2-1|), h the real branch x + sqrt(x^2-1).
double v_simplex(const CPoint2& z);

// (1/2) log h(|1-z1^2-z2^2| + |z1-z2|^2 + 2|z1 z2|).
double v_quarterpair(const CPoint2& z);

// Lundin form (1/2) log h(|z1|^2 + |z2|^2 + |z1^2+z2^2-1|).
double v_realdisk(const CPoint2& z);

// max(green_interval(z1), green_interval(z2)).
double v_square(const CPoint2& z);

// Batch evaluation over the real slice; routed through the active kernel
// backend so grids and point evaluations agree bitwise.
void v_real_slice(FormKind form, const double* xs, const double* ys, std::size_t n,
                  double* out);

// Equilibrium-density closed forms, normalization constant fixed to 1:
//   realdisk     (1-x^2-y^2)^{-1/2}
//   square       (1-x^2)^{-1/2} (1-y^2)^{-1/2}
//   quarterpair  |x+y| / sqrt(x y (1-x^2-y^2))
// Throws DomainError outside the interior, on the quarterpair axes (xy = 0),
// and for kinds without a closed-form density.
double density_formula(const SetDescriptor& set, double x, double y);

// Extremal function of the descriptor's set: model closed form composed with
// the inverse affine map.  Interval descriptors require z2 = 0 (C^1 slice).
// Kinds without a closed form throw DomainError.
double closed_form_value(const SetDescriptor& set, const CPoint2& z);

}  // namespace pluripot
