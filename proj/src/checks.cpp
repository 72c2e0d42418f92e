#include "qmirror/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "json.hpp"

#include "qmirror/geometry.hpp"
#include "qmirror/grid.hpp"
#include "qmirror/mirror1d.hpp"
#include "qmirror/modefield.hpp"
#include "qmirror/observables.hpp"
#include "qmirror/partialwave.hpp"
#include "qmirror/specfun.hpp"

namespace qmirror {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

CheckResult make(const std::string& name, double measured, double tolerance,
                 const std::string& detail) {
    return {name, measured <= tolerance, measured, tolerance, detail};
}

// d/dx f_l(x) = f_{l-1}(x) - (l+1)/x f_l(x) for j and y alike.
double dj(int l, double x) { return sph_bessel_j(l - 1, x) - (l + 1.0) / x * sph_bessel_j(l, x); }
double dy(int l, double x) { return sph_bessel_y(l - 1, x) - (l + 1.0) / x * sph_bessel_y(l, x); }

CheckResult check_bessel_recurrence() {
    const double xs[] = {0.1, 0.9, 2.3, 10.0, 37.5, 100.0};
    double worst = 0.0;
    for (double x : xs) {
        for (int l = 1; l <= 50; ++l) {
            const double lhs = (2.0 * l + 1.0) / x * sph_bessel_j(l, x);
            const double rhs = sph_bessel_j(l - 1, x) + sph_bessel_j(l + 1, x);
            const double scale = std::abs(sph_bessel_j(l - 1, x)) + std::abs(sph_bessel_j(l + 1, x));
            if (scale > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
    }
    return make("bessel_recurrence", worst, 1e-10,
                "(2l+1) j_l / x = j_{l-1} + j_{l+1}, x in [0.1, 100], l <= 50");
}

CheckResult check_harm_addition() {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uth(0.05, kPi - 0.05), uph(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> ul(0, 20);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const int l = ul(rng);
        const double theta = uth(rng), phi = uph(rng);
        double s = 0.0;
        for (int m = -l; m <= l; ++m) s += std::norm(sph_harm(l, m, theta, phi));
        worst = std::max(worst, std::abs(s * 4.0 * kPi / (2.0 * l + 1.0) - 1.0));
    }
    return make("harm_addition", worst, 1e-12,
                "sum_m |Y_lm|^2 = (2l+1)/4pi at random directions, l <= 20");
}

CheckResult check_wronskian() {
    const double x = 7.3;
    const int l = 6;
    const double w = sph_bessel_j(l, x) * dy(l, x) - dj(l, x) * sph_bessel_y(l, x);
    return make("bessel_wronskian", std::abs(w * x * x - 1.0), 1e-12,
                "j_l y_l' - j_l' y_l = 1/x^2 at x = 7.3, l = 6");
}

CheckResult check_multipole_norm() {
    // Angular profile of a TM mode integrates to |g_l|^2 over the sphere.
    const int l = 3, m = 2;
    const double k = 1.0, r = 2.0;
    const double g = sph_bessel_j(l, k * r);
    const AngularGrid grid = make_grid(32, 32);
    double acc = 0.0;
    for (int i = 0; i < grid.n_theta; ++i) {
        for (int j = 0; j < grid.n_phi; ++j) {
            const MultipoleField f = multipole_field(MultipoleKind::TM, SphericalIndex(l, m),
                                                     RadialKind::Regular, k, r, grid.theta[i],
                                                     grid.phi[j]);
            acc += grid.weight(i, j) * (std::norm(f.e_theta) + std::norm(f.e_phi));
        }
    }
    // Squared profile is even under theta -> pi - theta: double the hemisphere.
    return make("multipole_norm", std::abs(2.0 * acc / (g * g) - 1.0), 1e-8,
                "angular profile of mode (3,2) integrates to 1 over the sphere");
}

CheckResult check_multipole_divergence() {
    const SphericalIndex lm(2, 1);
    const double k = 1.3, r = 2.7, th = 1.05, ph = 0.6;
    const double hr = 1e-5 * r, ha = 1e-5;
    double worst = 0.0;
    for (MultipoleKind kind : {MultipoleKind::TM, MultipoleKind::TE}) {
        for (RadialKind rad : {RadialKind::Regular, RadialKind::Outgoing}) {
            const auto field = [&](double rr, double tt, double pp) {
                return multipole_field(kind, lm, rad, k, rr, tt, pp);
            };
            const MultipoleField fc = field(r, th, ph);
            const MultipoleField frp = field(r + hr, th, ph), frm = field(r - hr, th, ph);
            const MultipoleField ftp = field(r, th + ha, ph), ftm = field(r, th - ha, ph);
            const MultipoleField fpp = field(r, th, ph + ha), fpm = field(r, th, ph - ha);
            const cplx d_r = ((r + hr) * (r + hr) * frp.e_r - (r - hr) * (r - hr) * frm.e_r) /
                             (2.0 * hr) / (r * r);
            const cplx d_t = (std::sin(th + ha) * ftp.e_theta - std::sin(th - ha) * ftm.e_theta) /
                             (2.0 * ha) / (r * std::sin(th));
            const cplx d_p = (fpp.e_phi - fpm.e_phi) / (2.0 * ha) / (r * std::sin(th));
            const double scale =
                k * std::max({std::abs(fc.e_r), std::abs(fc.e_theta), std::abs(fc.e_phi)});
            worst = std::max(worst, std::abs(d_r + d_t + d_p) / scale);
        }
    }
    return make("multipole_divergence", worst, 1e-6,
                "finite-difference div E vanishes for TM/TE, j and h radial parts");
}

CheckResult check_cosint_reference() {
    return make("cosint_reference", std::abs(cos_int(1.0) - 0.3374039229009681), 1e-12,
                "Ci(1.0) against its tabulated value");
}

CheckResult check_sinint_limit() {
    const double dev = std::max(std::abs(sin_int(0.0)), std::abs(sin_int(1e6) - kPi / 2.0));
    return make("sinint_limit", dev, 2e-6, "Si(0) = 0 and Si(1e6) -> pi/2");
}

CheckResult check_oned_consistency() {
    double worst = 0.0;
    for (double a = 0.0; a <= 20.0; a += 0.37)
        worst = std::max(worst,
                         std::abs(gamma_1d(PhaseDistance(a)) - mode_intensity_1d(1.0, 0.0, PhaseDistance(a))));
    return make("oned_consistency", worst, 0.0,
                "gamma_1d(a) equals the standing-wave intensity at z = 0 exactly");
}

CheckResult check_oned_circle() {
    double worst = 0.0;
    for (double a = 0.0; a <= 20.0; a += 0.211) {
        const double g = gamma_1d(PhaseDistance(a)), d = shift_1d(PhaseDistance(a));
        worst = std::max(worst, std::abs((1.0 - g) * (1.0 - g) + d * d - 1.0));
    }
    return make("oned_circle", worst, 1e-12, "(1 - gamma)^2 + shift^2 = 1");
}

CheckResult check_oned_period() {
    double worst = 0.0;
    for (double a = 0.0; a <= 20.0; a += 0.173) {
        worst = std::max(worst, std::abs(gamma_1d(PhaseDistance(a + kPi)) - gamma_1d(PhaseDistance(a))));
        worst = std::max(worst, std::abs(shift_1d(PhaseDistance(a + kPi)) - shift_1d(PhaseDistance(a))));
    }
    return make("oned_period", worst, 1e-12, "gamma and shift are pi-periodic in a");
}

CheckResult check_addition_value() {
    const double kr = 7.0;
    return make("addition_value", std::abs(addition_sum(kr, 47) - 2.0 / 3.0), 1e-10,
                "partial-wave weight sum reaches 2/3 at l_max = kr + 40");
}

CheckResult check_parity_split() {
    const double kr = 7.0;
    const double total = addition_sum(kr, 47);
    const double even = parity_sum(kr, Parity::Even, 47);
    const double odd = parity_sum(kr, Parity::Odd, 47);
    return make("parity_split", std::abs(even + odd - total), 1e-12,
                "even and odd partial sums add up to the total");
}

CheckResult check_overlap_reference() {
    return make("overlap_reference", std::abs(overlap_I(0, 1, 0) + std::sqrt(3.0) / 4.0), 1e-12,
                "I(0, 1, 0) = -sqrt(3)/4");
}

PartialWaveSet random_waves(int l_max, unsigned seed, bool real_only) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    PartialWaveSet b(l_max);
    for (int l = 0; l <= l_max; ++l)
        for (int m = -l; m <= l; ++m)
            b.at(l, m) = real_only ? cplx(gauss(rng), 0.0) : cplx(gauss(rng), gauss(rng));
    return b;
}

// Full-sphere evaluation grid with node i + n/2 opposite to node i: mirrored
// polar nodes and phi shifted by pi (n_phi even).
AngularGrid antipodal_grid(int n_half_theta, int n_phi) {
    const AngularGrid base = make_grid(n_half_theta, n_phi);
    AngularGrid g = base;
    g.n_theta = 2 * n_half_theta;
    for (int i = 0; i < n_half_theta; ++i) {
        g.cos_theta.push_back(-base.cos_theta[i]);
        g.sin_theta.push_back(base.sin_theta[i]);
        g.theta.push_back(kPi - base.theta[i]);
        g.w_theta.push_back(base.w_theta[i]);
    }
    return g;
}

CheckResult check_inout_antisymmetry() {
    const int l_max = 12;
    const PartialWaveSet b = random_waves(l_max, 777, false);
    const int nh = 10, np = 16;
    const AngularGrid g = antipodal_grid(nh, np);
    const ParityAmplitudes f = parity_amplitudes(b, g);
    double worst = 0.0;
    for (int i = 0; i < nh; ++i) {
        for (int j = 0; j < np; ++j) {
            const std::size_t here = static_cast<std::size_t>(i) * np + j;
            const std::size_t there =
                static_cast<std::size_t>(i + nh) * np + (j + np / 2) % np;
            worst = std::max(worst, std::abs(f.f_out.values[here] + f.f_in.values[there]));
        }
    }
    return make("inout_antisymmetry", worst, 1e-10,
                "f_out(omega) = -f_in(-omega) for a random complex coefficient set");
}

double hemisphere_flux(const ScatteringAmplitude& v, const AngularGrid& grid) {
    double acc = 0.0;
    for (int i = 0; i < grid.n_theta; ++i)
        for (int j = 0; j < grid.n_phi; ++j)
            acc += grid.weight(i, j) * std::norm(v.values[static_cast<std::size_t>(i) * grid.n_phi + j]);
    return acc;
}

CheckResult check_flux_conservation() {
    const int l_max = 12;
    const PartialWaveSet b = random_waves(l_max, 4242, true);
    const PhaseDistance a(17.3);
    double worst = 0.0;
    const double alphas[] = {kPi / 2.0, 0.0, std::asin(0.6)};
    for (double alpha : alphas) {
        const AngularGrid grid =
            alpha > 0.0 ? make_cap_grid(alpha, 16, 32) : make_grid(16, 32);
        const ParityAmplitudes f = parity_amplitudes(b, grid);
        const ScatteredAmplitudes s = scattered_amplitudes(b, a, alpha, grid);
        const double in4 = 4.0 * hemisphere_flux(f.f_in, grid);
        const double out = hemisphere_flux(s.g_even, grid) + hemisphere_flux(s.g_odd, grid);
        worst = std::max(worst, std::abs(out / in4 - 1.0));
    }
    return make("flux_conservation", worst, 1e-8,
                "scattered flux equals 4x the ingoing flux for full, empty and NA=0.6 caps");
}

CheckResult check_map_free_space() {
    const int l_max = 8;
    const PartialWaveSet b = random_waves(l_max, 99, false);
    const AngularGrid grid = make_grid(12, 16);
    const ParityAmplitudes f = parity_amplitudes(b, grid);
    const ScatteredAmplitudes s = scattered_amplitudes(b, PhaseDistance(5.5), 0.0, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.f_even.values.size(); ++i) {
        worst = std::max(worst, std::abs(s.g_even.values[i] - f.f_even.values[i]));
        worst = std::max(worst, std::abs(s.g_odd.values[i] - f.f_odd.values[i]));
    }
    return make("map_free_space", worst, 1e-14,
                "with no mirror the scattered amplitudes reduce to the free ones");
}

CheckResult check_oracle_cross() {
    const MirrorGeometry geom(PhaseDistance(20.0 * kPi), kPi / 2.0, 1.0);
    const DipoleOrientation dz = DipoleOrientation::normalized(0.0, 0.0, 1.0);
    const AngularGrid grid = make_grid(64, 64);
    double worst = 0.0;
    for (double r : {0.3, -0.3, 1.1}) {
        const double direct = vacuum_density(1.0, Displacement::axial(r), geom, dz, grid);
        const double oracle = oracle_density(geom, dz, r, 150);
        worst = std::max(worst, std::abs(oracle - direct));
    }
    return make("oracle_cross", worst, 1e-2,
                "partial-wave reconstruction agrees with the angular integral on-axis");
}

CheckResult check_freespace_norm() {
    std::mt19937 rng(2024);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> urad(0.0, 5.0);
    const MirrorGeometry geom(PhaseDistance(12.7), 1.0, 0.0);
    const AngularGrid grid = make_grid(48, 48);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const DipoleOrientation d = DipoleOrientation::normalized(gauss(rng), gauss(rng), gauss(rng));
        double v[3] = {gauss(rng), gauss(rng), gauss(rng)};
        const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        const double rad = urad(rng);
        const Displacement r({v[0] / n * rad, v[1] / n * rad, v[2] / n * rad});
        worst = std::max(worst, std::abs(vacuum_density(1.0, r, geom, d, grid) - 1.0));
    }
    return make("freespace_norm", worst, 1e-10,
                "density is exactly 1 with reflectivity 0, any dipole and position");
}

CheckResult check_rho_affinity() {
    const AngularGrid grid = make_cap_grid(0.9, 48, 48);
    const DipoleOrientation d = DipoleOrientation::normalized(0.3, -0.5, 0.81);
    const Displacement r({0.3, -0.2, 0.5});
    const auto dens = [&](double rho) {
        return vacuum_density(1.0, r, MirrorGeometry(PhaseDistance(31.2), 0.9, rho), d, grid);
    };
    const double d0 = dens(0.0), d1 = dens(1.0), dm = dens(0.37);
    return make("rho_affinity", std::abs(dm - (d0 + 0.37 * (d1 - d0))), 1e-12,
                "density is affine in the reflectivity");
}

CheckResult check_grid_refinement() {
    const MirrorGeometry geom(PhaseDistance(20.5 * kPi), kPi / 2.0, 1.0);
    const DipoleOrientation d = DipoleOrientation::normalized(1.0, 0.0, 0.0);
    const Displacement r = Displacement::axial(1.2);
    const double c = vacuum_density(1.0, r, geom, d, make_grid(72, 72));
    const double fine = vacuum_density(1.0, r, geom, d, make_grid(144, 144));
    return make("grid_refinement", std::abs(c - fine), 1e-8,
                "density stable under grid doubling at |r| = 1.2 wavelengths");
}

CheckResult check_aperture_monotone() {
    const DipoleOrientation d = DipoleOrientation::normalized(1.0, 0.0, 0.0);
    const Displacement focus = Displacement::axial(0.0);
    double prev = 1.0;  // NA -> 0 limit
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k) {
        const double alpha = std::asin(k / 20.0);
        const MirrorGeometry geom(PhaseDistance(20.0 * kPi), alpha, 1.0);
        const double g = vacuum_density(1.0, focus, geom, d, make_cap_grid(alpha, 32, 32));
        worst = std::max(worst, g - prev);  // node curve must not increase
        prev = g;
    }
    return make("aperture_monotone", worst, 1e-10,
                "node-configuration decay rate decreases as the aperture opens");
}

CheckResult check_casimir_identity() {
    const CasimirParams p(PhaseDistance(50.0 * kPi + 0.7), 1234.5);
    const CasimirSplit s = casimir_decomposition(p);
    const double direct = lamb_direct(p);
    const double dev = std::abs(s.delta_se + s.delta_fs + s.delta_cp - direct) / std::abs(direct);
    return make("casimir_identity", dev, 1e-6,
                "closed-form decomposition reproduces the direct quadrature");
}

CheckResult check_casimir_kappa() {
    const PhaseDistance a(50.0 * kPi);
    const double c1 = casimir_decomposition(CasimirParams(a, 1e3)).delta_cp;
    const double c2 = casimir_decomposition(CasimirParams(a, 2e3)).delta_cp;
    return make("casimir_kappa", std::abs(c2 - c1), 1e-6,
                "boundary part is cutoff-independent at phase-aligned distances");
}

CheckResult check_scaling_slope() {
    const std::vector<PhaseDistance> a_list = {
        PhaseDistance(10 * kPi), PhaseDistance(32 * kPi), PhaseDistance(100 * kPi),
        PhaseDistance(316 * kPi), PhaseDistance(1000 * kPi)};
    const ScalingFit fit = casimir_scaling(a_list, 1e3);
    return make("scaling_slope", std::abs(fit.cp_slope + 2.0), 0.05,
                "log-log slope of |delta_cp| at nodes is -2 (plane reference -4)");
}

CheckResult check_focus_closed_form() {
    const double a = 20.0 * kPi + 0.4;
    const QedResult q = qed_result(PhaseDistance(a));
    const double dev = std::max(std::abs(q.gamma_bar - (1.0 - std::cos(2.0 * a))),
                                std::abs(q.delta_e_bar - std::sin(2.0 * a)));
    return make("focus_closed_form", dev, 1e-12,
                "full-hemisphere focus rate and shift match 1 - cos(2a) and sin(2a)");
}

CheckResult check_grid_weight_sum() {
    const AngularGrid g = make_grid(16, 16);
    double acc = 0.0;
    for (int i = 0; i < g.n_theta; ++i)
        for (int j = 0; j < g.n_phi; ++j) acc += g.weight(i, j);
    return make("grid_weight_sum", std::abs(acc - 2.0 * kPi), 1e-12,
                "quadrature weights sum to the hemisphere solid angle");
}

CheckResult check_grid_exactness() {
    const AngularGrid g = make_grid(8, 8);
    double worst = 0.0;
    for (int k = 0; k <= 14; ++k) {
        double acc = 0.0;
        for (int i = 0; i < g.n_theta; ++i) acc += g.w_theta[i] * std::pow(g.cos_theta[i], k);
        worst = std::max(worst, std::abs(acc * (k + 1.0) - 1.0));
    }
    return make("grid_exactness", worst, 1e-13,
                "Gauss rule integrates u^k exactly for k <= 2 n - 2");
}

}  // namespace

std::vector<CheckResult> run_all_checks() {
    return {
        check_bessel_recurrence(),
        check_harm_addition(),
        check_wronskian(),
        check_multipole_norm(),
        check_multipole_divergence(),
        check_cosint_reference(),
        check_sinint_limit(),
        check_oned_consistency(),
        check_oned_circle(),
        check_oned_period(),
        check_addition_value(),
        check_parity_split(),
        check_overlap_reference(),
        check_inout_antisymmetry(),
        check_flux_conservation(),
        check_map_free_space(),
        check_oracle_cross(),
        check_freespace_norm(),
        check_rho_affinity(),
        check_grid_refinement(),
        check_aperture_monotone(),
        check_casimir_identity(),
        check_casimir_kappa(),
        check_scaling_slope(),
        check_focus_closed_form(),
        check_grid_weight_sum(),
        check_grid_exactness(),
    };
}

std::string checks_to_json(const std::vector<CheckResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& r : results) {
        nlohmann::json item;
        item["name"] = r.name;
        item["passed"] = r.passed;
        item["measured"] = r.measured;
        item["tolerance"] = r.tolerance;
        item["detail"] = r.detail;
        arr.push_back(item);
    }
    return arr.dump(2) + "\n";
}

}  // namespace qmirror
