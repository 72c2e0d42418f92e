#pragma once

#include <array>

#include "qmirror/mirror1d.hpp"

namespace qmirror {

// Spherical mirror seen from its focus: phase radius a = k0 R, half-aperture
// alpha in (0, pi/2] (numerical aperture NA = sin alpha), cap reflectivity
// rho in [0, 1]. The mirror cap occupies polar angles theta < alpha.
struct MirrorGeometry {
    PhaseDistance a;
    double alpha;
    double rho;

    MirrorGeometry(PhaseDistance a_, double alpha_, double rho_);
    static MirrorGeometry from_na(PhaseDistance a, double na, double rho);
    double na() const;
};

// Unit vector giving the linear dipole polarization (Cartesian, z = mirror axis).
struct DipoleOrientation {
    std::array<double, 3> d;

    explicit DipoleOrientation(const std::array<double, 3>& d_hat);  // must be unit
    static DipoleOrientation normalized(double x, double y, double z);
};

// Atom position relative to the focus, components in units of the wavelength.
// Limited to |r| <= 100 wavelengths (far-field treatment validity guard).
struct Displacement {
    std::array<double, 3> r_wavelengths;

    explicit Displacement(const std::array<double, 3>& r);
    static Displacement axial(double z_wavelengths);
    static Displacement transverse(double x_wavelengths);
    double norm() const;
};

}  // namespace qmirror
