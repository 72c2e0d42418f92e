#pragma once

#include <vector>

#include "qmirror/geometry.hpp"
#include "qmirror/grid.hpp"

namespace qmirror {

// Normalized density of vacuum fluctuations felt by a dipole d_hat at
// displacement r from the focus, at wavenumber k = k_over_k0 * k0:
//   D = 3 int_hemisphere (dOmega / 4 pi) [1 - |d.O|^2]
//         [1 - rho(theta) cos(2 (k/k0)(a + 2 pi O.r))],
// with rho(theta) = rho on the mirror cap (theta < alpha) and 0 elsewhere.
// Normalized so D = 1 exactly when rho = 0, for every dipole orientation.
// Emits a resolution diagnostic on stderr when the grid undersamples the
// displacement-phase oscillation (n_theta or n_phi below ~ 8 k |r| / k0).
double vacuum_density(double k_over_k0, const Displacement& r,
                      const MirrorGeometry& geom, const DipoleOrientation& d_hat,
                      const AngularGrid& grid);

enum class ScanDirection { Axial, Transverse };

struct ScanPoint {
    double r_wavelengths;
    double density;
};

// Densities at k = k0 sampled along a ray from the focus: axial scans move
// along +z (the mirror axis), transverse scans along +x. steps >= 2 samples
// covering [0, r_max] inclusive.
std::vector<ScanPoint> density_scan(const MirrorGeometry& geom,
                                    const DipoleOrientation& d_hat,
                                    ScanDirection direction, double r_max_wavelengths,
                                    int steps, const AngularGrid& grid);

}  // namespace qmirror
