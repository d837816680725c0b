#include "pluripot/closed_forms.hpp"

#include <cmath>
#include <complex>

#include "pluripot/errors.hpp"

namespace pluripot {

namespace {

bool is_real(const CPoint2& z) { return z.z1.imag() == 0.0 && z.z2.imag() == 0.0; }

double kernel_value(FormKind form, const CPoint2& z) {
    const double x = z.z1.real();
    const double y = z.z2.real();
    double out = 0.0;
    v_real_batch(form, &x, &y, 1, &out);
    return out;
}

}  // namespace

double v_simplex(const CPoint2& z) {
    if (is_real(z)) return kernel_value(FormKind::simplex, z);
    const double arg = std::abs(z.z1) + std::abs(z.z2) + std::abs(z.z1 + z.z2 - 1.0);
    return acosh_ge1(arg);
}

double v_quarterpair(const CPoint2& z) {
    if (is_real(z)) return kernel_value(FormKind::quarterpair, z);
    const Complex d = z.z1 - z.z2;
    const double arg = std::abs(1.0 - z.z1 * z.z1 - z.z2 * z.z2) + std::norm(d) +
                       2.0 * std::abs(z.z1 * z.z2);
    return 0.5 * acosh_ge1(arg);
}

double v_realdisk(const CPoint2& z) {
    if (is_real(z)) return kernel_value(FormKind::realdisk, z);
    const double arg =
        std::norm(z.z1) + std::norm(z.z2) + std::abs(z.z1 * z.z1 + z.z2 * z.z2 - 1.0);
    return 0.5 * acosh_ge1(arg);
}

double v_square(const CPoint2& z) {
    if (is_real(z)) return kernel_value(FormKind::square, z);
    return std::max(green_interval(z.z1), green_interval(z.z2));
}

void v_real_slice(FormKind form, const double* xs, const double* ys, std::size_t n,
                  double* out) {
    v_real_batch(form, xs, ys, n, out);
}

double density_formula(const SetDescriptor& set, double x, double y) {
    if (!set.affine.is_identity())
        throw DomainError("density_formula: affine images are not supported");
    switch (set.kind) {
        case SetKind::realdisk: {
            const double r2 = x * x + y * y;
            if (r2 >= 1.0) throw DomainError("density_formula: point outside interior of realdisk");
            return 1.0 / std::sqrt(1.0 - r2);
        }
        case SetKind::square: {
            if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0)
                throw DomainError("density_formula: point outside interior of square");
            return 1.0 / std::sqrt((1.0 - x * x) * (1.0 - y * y));
        }
        case SetKind::quarterpair: {
            const double p = x * y;
            if (p == 0.0) throw DomainError("density_formula: singular on quarterpair axes");
            if (p < 0.0 || x * x + y * y >= 1.0)
                throw DomainError("density_formula: point outside interior of quarterpair");
            return std::abs(x + y) / std::sqrt(p * (1.0 - x * x - y * y));
        }
        default:
            throw DomainError("density_formula: no closed-form density for this set");
    }
}

double closed_form_value(const SetDescriptor& set, const CPoint2& z) {
    set.validate();
    const CPoint2 w = set.affine.is_identity() ? z : set.affine.inverse().apply(z);
    switch (set.kind) {
        case SetKind::interval:
            if (w.z2 != Complex(0.0, 0.0))
                throw DomainError("interval evaluation requires z2 = 0");
            return green_interval(w.z1);
        case SetKind::realdisk:
            return v_realdisk(w);
        case SetKind::square:
            return v_square(w);
        case SetKind::simplex:
            return v_simplex(w);
        case SetKind::quarterpair:
            return v_quarterpair(w);
        default:
            throw DomainError("no closed-form extremal function for this set");
    }
}

}  // namespace pluripot
