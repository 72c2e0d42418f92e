#include "qmirror/mirror1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmirror {

PhaseDistance::PhaseDistance(double a) : value(a) {
    if (!(a >= 0.0)) throw std::domain_error("PhaseDistance: require a >= 0");
}

PhaseDistance PhaseDistance::from_radius_wavelengths(double r_over_lambda) {
    return PhaseDistance(2.0 * std::numbers::pi * r_over_lambda);
}

double mode_intensity_1d(double k_over_k0, double z_in_wavelengths, PhaseDistance a) {
    if (!(k_over_k0 > 0.0)) throw std::domain_error("mode_intensity_1d: require k > 0");
    const double kz = 2.0 * std::numbers::pi * z_in_wavelengths;
    if (a.value + kz < 0.0)
        throw std::domain_error("mode_intensity_1d: point lies behind the mirror");
    return 1.0 - std::cos(2.0 * k_over_k0 * (a.value + kz));
}

double gamma_1d(PhaseDistance a) { return 1.0 - std::cos(2.0 * a.value); }

double shift_1d(PhaseDistance a) { return std::sin(2.0 * a.value); }

}  // namespace qmirror
