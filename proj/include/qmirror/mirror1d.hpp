#pragma once

namespace qmirror {

// Mirror-to-atom optical phase a = k0 * R (radians), a >= 0.
struct PhaseDistance {
    double value;

    explicit PhaseDistance(double a);
    static PhaseDistance from_radius_wavelengths(double r_over_lambda);
};

// Standing-wave intensity |e_k(z)|^2 at phase distance a from the mirror,
// normalized to spatial average 1: equals 1 - cos(2 (k/k0)(a + 2 pi z/lambda)).
// Requires the point to lie on the atom side of the mirror: a + 2 pi z >= 0.
double mode_intensity_1d(double k_over_k0, double z_in_wavelengths, PhaseDistance a);

// Decay rate over its free-space value in the 1D model: 1 - cos(2a).
double gamma_1d(PhaseDistance a);

// Excited-state shift over the free-space decay rate in the 1D model: sin(2a).
double shift_1d(PhaseDistance a);

}  // namespace qmirror
