#include "qmirror/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmirror {

MirrorGeometry::MirrorGeometry(PhaseDistance a_, double alpha_, double rho_)
    : a(a_), alpha(alpha_), rho(rho_) {
    if (!(alpha > 0.0 && alpha <= std::numbers::pi / 2.0 + 1e-15))
        throw std::domain_error("MirrorGeometry: require 0 < alpha <= pi/2");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::domain_error("MirrorGeometry: require 0 <= rho <= 1");
}

MirrorGeometry MirrorGeometry::from_na(PhaseDistance a, double na, double rho) {
    if (!(na > 0.0 && na <= 1.0))
        throw std::domain_error("MirrorGeometry: require 0 < NA <= 1");
    return MirrorGeometry(a, std::asin(na), rho);
}

double MirrorGeometry::na() const { return std::sin(alpha); }

DipoleOrientation::DipoleOrientation(const std::array<double, 3>& d_hat) : d(d_hat) {
    const double n2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    if (std::abs(n2 - 1.0) > 2e-12)
        throw std::domain_error("DipoleOrientation: vector must be unit length");
}

DipoleOrientation DipoleOrientation::normalized(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 0.0)) throw std::domain_error("DipoleOrientation: zero vector");
    return DipoleOrientation({x / n, y / n, z / n});
}

Displacement::Displacement(const std::array<double, 3>& r) : r_wavelengths(r) {
    for (double c : r)
        if (!std::isfinite(c)) throw std::domain_error("Displacement: non-finite component");
    if (norm() > 100.0)
        throw std::domain_error("Displacement: |r| must be <= 100 wavelengths");
}

Displacement Displacement::axial(double z_wavelengths) {
    return Displacement({0.0, 0.0, z_wavelengths});
}

Displacement Displacement::transverse(double x_wavelengths) {
    return Displacement({x_wavelengths, 0.0, 0.0});
}

double Displacement::norm() const {
    return std::sqrt(r_wavelengths[0] * r_wavelengths[0] +
                     r_wavelengths[1] * r_wavelengths[1] +
                     r_wavelengths[2] * r_wavelengths[2]);
}

}  // namespace qmirror
