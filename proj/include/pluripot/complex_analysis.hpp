#pragma once

#include <complex>

namespace pluripot {

using Complex = std::complex<double>;

// Point of C^2.  Real slices embed via from_real.
struct CPoint2 {
    Complex z1;
    Complex z2;

    static CPoint2 from_real(double x, double y) {
        return CPoint2{Complex(x, 0.0), Complex(y, 0.0)};
    }
};

// Arguments of the interval extremal function this close to 1 are snapped to
// the set: acosh(1 + 1e-13) ~ 4.5e-7, which would otherwise leak a spurious
// positive value at points that lie on the set up to rounding.
inline constexpr double kGreenArgSnap = 1e-13;

// Inverse Joukowski map zeta + sqrt(zeta^2 - 1), branch chosen so |h| >= 1
// (the branch mapping C \ [-1,1] onto the exterior of the unit disk).
Complex joukowski_h(Complex zeta);

// Green function of [-1,1]: max(0, log|h(zeta)|).  Zero on the interval.
double green_interval(Complex zeta);

// acosh on [1, inf) with the snap-to-zero guard near 1.  Preconditions are the
// caller's problem only up to -kGreenArgSnap of slack; anything smaller throws
// in debug via assert and clamps in release.
double acosh_ge1(double x);

}  // namespace pluripot
