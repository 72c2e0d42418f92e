#include "qmirror/modefield.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace qmirror {

namespace {
constexpr double kPi = std::numbers::pi;
}

double vacuum_density(double k_over_k0, const Displacement& r, const MirrorGeometry& geom,
                      const DipoleOrientation& d_hat, const AngularGrid& grid) {
    if (!(k_over_k0 > 0.0)) throw std::domain_error("vacuum_density: require k/k0 > 0");

    // The integrand oscillates like cos(2 k (a + r.Omega)); flag grids that
    // cannot resolve the fastest angular variation, which is set by k|r|.
    const double k_phase = 2.0 * kPi * k_over_k0;  // per wavelength unit
    const double need = 8.0 * k_over_k0 * r.norm() + 8.0;
    if (geom.rho != 0.0 && (grid.n_theta < need || grid.n_phi < need))
        std::cerr << "vacuum_density: grid " << grid.n_theta << "x" << grid.n_phi
                  << " may under-resolve the integrand (suggest >= " << static_cast<int>(need)
                  << " per axis for |r| = " << r.norm() << " wavelengths)\n";

    const double ka = k_over_k0 * geom.a.value;
    double acc = 0.0;
    for (int i = 0; i < grid.n_theta; ++i) {
        const double u = grid.cos_theta[i];
        const double s = grid.sin_theta[i];
        const double refl = grid.theta[i] < geom.alpha ? geom.rho : 0.0;
        for (int j = 0; j < grid.n_phi; ++j) {
            const double omega[3] = {s * std::cos(grid.phi[j]), s * std::sin(grid.phi[j]), u};
            const double dd = d_hat.d[0] * omega[0] + d_hat.d[1] * omega[1] + d_hat.d[2] * omega[2];
            const double proj = 1.0 - dd * dd;
            double weight = 1.0;
            if (refl != 0.0) {
                const double rw = r.r_wavelengths[0] * omega[0] + r.r_wavelengths[1] * omega[1] +
                                  r.r_wavelengths[2] * omega[2];
                weight = 1.0 - refl * std::cos(2.0 * (ka + k_phase * rw));
            }
            acc += grid.weight(i, j) * proj * weight;
        }
    }
    return 3.0 * acc / (4.0 * kPi);
}

std::vector<ScanPoint> density_scan(const MirrorGeometry& geom, const DipoleOrientation& d_hat,
                                    ScanDirection direction, double r_max_wavelengths, int steps,
                                    const AngularGrid& grid) {
    if (!(r_max_wavelengths >= 0.0))
        throw std::domain_error("density_scan: require r_max >= 0");
    if (steps < 2) throw std::invalid_argument("density_scan: require steps >= 2");

    std::vector<ScanPoint> out;
    out.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double rv = r_max_wavelengths * i / (steps - 1);
        const Displacement r = direction == ScanDirection::Axial ? Displacement::axial(rv)
                                                                 : Displacement::transverse(rv);
        out.push_back({rv, vacuum_density(1.0, r, geom, d_hat, grid)});
    }
    return out;
}

}  // namespace qmirror
