#include "qmirror/partialwave.hpp"

#include <cmath>
#include <complex>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "qmirror/specfun.hpp"

namespace qmirror {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;
const cplx kI(0.0, 1.0);

// i^l without drift for large l.
cplx i_pow(int l) {
    switch (((l % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// Single term of the radial partial-wave weight l(l+1)(2l+1) (j_l(x)/x)^2.
double radial_weight_term(int l, double x) {
    const double jx = sph_bessel_j(l, x) / x;
    return l * (l + 1.0) * (2.0 * l + 1.0) * jx * jx;
}

void warn_truncation(const char* who, double kr, int l_max, double tail) {
    std::cerr << who << ": truncation tail estimate " << tail << " exceeds 1e-10 (kr=" << kr
              << ", l_max=" << l_max << ")\n";
}

// 2 pi int_0^1 Pbar_l^m Pbar_l'^m du for all 0 <= l, l' <= l_max at fixed m,
// by Gauss-Legendre of order 2 l_max + 8. j_table[l' * (l_max+1) + l].
std::vector<double> hemisphere_overlap_table(int l_max, int m) {
    const int n = 2 * l_max + 8;
    std::vector<double> x, w;
    gauss_legendre(n, x, w);

    std::vector<double> rows(static_cast<std::size_t>(n) * (l_max + 1));
    for (int k = 0; k < n; ++k) {
        const double u = 0.5 * (x[k] + 1.0);
        const std::vector<double> row = legendre_norm_row(l_max, m, u);
        for (int l = 0; l <= l_max; ++l) rows[static_cast<std::size_t>(k) * (l_max + 1) + l] = row[l];
    }

    std::vector<double> table(static_cast<std::size_t>(l_max + 1) * (l_max + 1), 0.0);
    for (int lp = 0; lp <= l_max; ++lp) {
        for (int l = 0; l <= l_max; ++l) {
            if (((l + lp) & 1) == 0) continue;  // same parity never used
            double s = 0.0;
            for (int k = 0; k < n; ++k) {
                const std::size_t base = static_cast<std::size_t>(k) * (l_max + 1);
                s += w[k] * rows[base + lp] * rows[base + l];
            }
            table[static_cast<std::size_t>(lp) * (l_max + 1) + l] = 2.0 * kPi * 0.5 * s;
        }
    }
    return table;
}

// (-1)^((l + l' + 1) / 2) for opposite-parity pairs.
double overlap_sign(int l_prime, int l) {
    return ((l + l_prime + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
}

}  // namespace

PartialWaveSet::PartialWaveSet(int l_max) : l_max_(l_max) {
    if (l_max < 0) throw std::invalid_argument("PartialWaveSet: require l_max >= 0");
    coeffs_.assign(static_cast<std::size_t>(l_max + 1) * (l_max + 1), cplx(0.0, 0.0));
}

std::complex<double>& PartialWaveSet::at(int l, int m) {
    if (l < 0 || l > l_max_ || std::abs(m) > l)
        throw std::out_of_range("PartialWaveSet: index (l, m) out of range");
    return coeffs_[static_cast<std::size_t>(l) * l + l + m];
}

const std::complex<double>& PartialWaveSet::at(int l, int m) const {
    return const_cast<PartialWaveSet*>(this)->at(l, m);
}

double addition_sum(double kr, int l_max) {
    if (!(kr > 0.0)) throw std::domain_error("addition_sum: require kr > 0");
    if (l_max < 1) throw std::invalid_argument("addition_sum: require l_max >= 1");
    double s = 0.0;
    for (int l = 1; l <= l_max; ++l) s += radial_weight_term(l, kr);
    const double tail = radial_weight_term(l_max, kr);
    if (tail > 1e-10) warn_truncation("addition_sum", kr, l_max, tail);
    return s;
}

double parity_sum(double kr, Parity parity, int l_max) {
    if (!(kr > 0.0)) throw std::domain_error("parity_sum: require kr > 0");
    if (l_max < 1) throw std::invalid_argument("parity_sum: require l_max >= 1");
    double s = 0.0;
    for (int l = (parity == Parity::Even ? 2 : 1); l <= l_max; l += 2)
        s += radial_weight_term(l, kr);
    const double tail = radial_weight_term(l_max, kr);
    if (tail > 1e-10) warn_truncation("parity_sum", kr, l_max, tail);
    return s;
}

double overlap_I(int l_prime, int l, int m) {
    if (l < 0 || l_prime < 0) throw std::invalid_argument("overlap_I: negative degree");
    if (((l + l_prime) & 1) == 0)
        throw std::invalid_argument("overlap_I: defined for opposite-parity (l + l' odd) pairs only");
    const int mm = std::abs(m);
    if (mm > std::min(l, l_prime))
        throw std::invalid_argument("overlap_I: require |m| <= min(l, l')");

    const int n = 2 * std::max(l, l_prime) + 8;
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    const int lmx = std::max(l, l_prime);
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        const double u = 0.5 * (x[k] + 1.0);
        const std::vector<double> row = legendre_norm_row(lmx, mm, u);
        s += w[k] * row[l] * row[l_prime];
    }
    return overlap_sign(l_prime, l) * 2.0 * kPi * 0.5 * s;
}

PartialWaveSet hemisphere_map(const PartialWaveSet& b, PhaseDistance a) {
    const int l_max = b.l_max();
    PartialWaveSet c(l_max);
    const cplx even_front = std::exp(kI * a.value) * std::cos(a.value);
    const cplx odd_front = -kI * std::exp(kI * a.value) * std::sin(a.value);

    for (int m = 0; m <= l_max; ++m) {
        bool any = false;
        for (int l = m; l <= l_max && !any; ++l) {
            if (b.at(l, m) != cplx(0.0, 0.0)) any = true;
            if (m > 0 && b.at(l, -m) != cplx(0.0, 0.0)) any = true;
        }
        if (!any) continue;

        const std::vector<double> J = hemisphere_overlap_table(l_max, m);
        const auto J_at = [&](int lp, int l) {
            return J[static_cast<std::size_t>(lp) * (l_max + 1) + l];
        };

        for (int sign = 0; sign < (m == 0 ? 1 : 2); ++sign) {
            const int ms = sign == 0 ? m : -m;
            for (int lp = m; lp <= l_max; ++lp) {
                cplx cross(0.0, 0.0);
                const int l_start = std::max(m, lp % 2 == 0 ? 1 : 0);
                for (int l = l_start + ((l_start + lp) % 2 == 0 ? 1 : 0); l <= l_max; l += 2)
                    cross += b.at(l, ms) * (overlap_sign(lp, l) * J_at(lp, l));
                if (lp % 2 == 0)
                    c.at(lp, ms) = even_front * (b.at(lp, ms) + 2.0 * kI * cross);
                else
                    c.at(lp, ms) = odd_front * (b.at(lp, ms) - 2.0 * kI * cross);
            }
        }
    }
    return c;
}

ParityAmplitudes parity_amplitudes(const PartialWaveSet& b, const AngularGrid& grid) {
    const int l_max = b.l_max();
    const std::size_t n_samples = grid.node_count();
    ParityAmplitudes out;
    out.f_even.values.assign(n_samples, cplx(0.0, 0.0));
    out.f_odd.values.assign(n_samples, cplx(0.0, 0.0));
    out.f_in.values.assign(n_samples, cplx(0.0, 0.0));
    out.f_out.values.assign(n_samples, cplx(0.0, 0.0));

    for (int i = 0; i < grid.n_theta; ++i) {
        const double u = grid.cos_theta[i];
        // a_m[m + l_max] per parity: sum over l of b_{l,m} i^l Pbar_l^{|m|}(u).
        std::vector<cplx> am_even(2 * l_max + 1, cplx(0.0, 0.0));
        std::vector<cplx> am_odd(2 * l_max + 1, cplx(0.0, 0.0));
        for (int m = 0; m <= l_max; ++m) {
            const std::vector<double> row = legendre_norm_row(l_max, m, u);
            for (int l = m; l <= l_max; ++l) {
                const cplx w = i_pow(l) * row[l];
                auto& dst = (l % 2 == 0) ? am_even : am_odd;
                dst[l_max + m] += b.at(l, m) * w;
                if (m > 0) {
                    const double cs = (m % 2 == 0) ? 1.0 : -1.0;  // Y_{l,-m} phase
                    dst[l_max - m] += b.at(l, -m) * w * cs;
                }
            }
        }
        for (int j = 0; j < grid.n_phi; ++j) {
            cplx fe(0.0, 0.0), fo(0.0, 0.0);
            for (int m = -l_max; m <= l_max; ++m) {
                const cplx e = std::polar(1.0, m * grid.phi[j]);
                fe += am_even[l_max + m] * e;
                fo += am_odd[l_max + m] * e;
            }
            const std::size_t idx = static_cast<std::size_t>(i) * grid.n_phi + j;
            out.f_even.values[idx] = fe;
            out.f_odd.values[idx] = fo;
            out.f_in.values[idx] = 0.5 * kI * (fo - fe);
            out.f_out.values[idx] = 0.5 * kI * (fo + fe);
        }
    }
    return out;
}

ScatteredAmplitudes scattered_amplitudes(const PartialWaveSet& b, PhaseDistance a,
                                         double alpha, const AngularGrid& grid) {
    if (!(alpha >= 0.0 && alpha <= kPi / 2.0 + 1e-15))
        throw std::domain_error("scattered_amplitudes: require 0 <= alpha <= pi/2");
    const ParityAmplitudes f = parity_amplitudes(b, grid);
    const cplx mirror_odd = -2.0 * std::exp(kI * a.value) * std::sin(a.value);
    const cplx mirror_even = 2.0 * kI * std::exp(kI * a.value) * std::cos(a.value);

    ScatteredAmplitudes out;
    const std::size_t n_samples = grid.node_count();
    out.g_even.values.assign(n_samples, cplx(0.0, 0.0));
    out.g_odd.values.assign(n_samples, cplx(0.0, 0.0));
    for (int i = 0; i < grid.n_theta; ++i) {
        const bool on_mirror = grid.theta[i] < alpha;
        for (int j = 0; j < grid.n_phi; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * grid.n_phi + j;
            if (on_mirror) {
                out.g_odd.values[idx] = mirror_odd * f.f_in.values[idx];
                out.g_even.values[idx] = mirror_even * f.f_in.values[idx];
            } else {
                out.g_odd.values[idx] = f.f_odd.values[idx];
                out.g_even.values[idx] = f.f_even.values[idx];
            }
        }
    }
    return out;
}

double oracle_density(const MirrorGeometry& geom, const DipoleOrientation& d_hat,
                      double r_axial_wavelengths, int l_max) {
    if (std::abs(geom.alpha - kPi / 2.0) > 1e-12)
        throw std::domain_error("oracle_density: full hemisphere (alpha = pi/2) only");
    if (geom.rho != 0.0 && geom.rho != 1.0)
        throw std::domain_error("oracle_density: require rho of exactly 0 or 1");
    if (std::abs(std::abs(d_hat.d[2]) - 1.0) > 1e-12)
        throw std::domain_error("oracle_density: dipole must point along the axis (radially)");
    const double x = 2.0 * kPi * std::abs(r_axial_wavelengths);
    if (l_max < x + 40)
        throw std::invalid_argument("oracle_density: require l_max >= 2 pi |r| + 40");

    // Radial coupling kernel of mode l at the atom; at the focus only l = 1
    // survives through j_l(x)/x -> delta_{l,1}/3.
    std::vector<double> kernel(l_max + 1, 0.0);
    for (int l = 1; l <= l_max; ++l) {
        double jx_over_x;
        if (x == 0.0) {
            jx_over_x = (l == 1) ? 1.0 / 3.0 : 0.0;
        } else {
            jx_over_x = sph_bessel_j(l, x) / x;
        }
        double k = std::sqrt(l * (l + 1.0)) * jx_over_x * std::sqrt((2.0 * l + 1.0) / (4.0 * kPi));
        // Atom on the far side of the focus from the mirror apex sees the
        // mode from theta = pi, picking up the harmonic's parity sign.
        if (r_axial_wavelengths > 0.0 && l % 2 == 1) k = -k;
        kernel[l] = k;
    }

    double denom = 0.0;
    for (int l = 1; l <= l_max; ++l) denom += kernel[l] * kernel[l];

    if (x > 0.0) {
        const double tail = radial_weight_term(l_max, x) / (4.0 * kPi * (2.0 / 3.0));
        if (tail > 1e-10) warn_truncation("oracle_density", x, l_max, tail);
    }

    if (geom.rho == 0.0) return denom / denom;  // identity map, free space

    const std::vector<double> J = hemisphere_overlap_table(l_max, 0);
    const auto I_at = [&](int lp, int l) {
        return overlap_sign(lp, l) * J[static_cast<std::size_t>(lp) * (l_max + 1) + l];
    };
    const cplx even_front = std::exp(kI * geom.a.value) * std::cos(geom.a.value);
    const cplx odd_front = -kI * std::exp(kI * geom.a.value) * std::sin(geom.a.value);

    double num = 0.0;
    for (int l0 = 0; l0 <= l_max; ++l0) {
        // Field at the atom from the unit input mode (l0, m=0) after the map.
        cplx field(0.0, 0.0);
        for (int lp = 1; lp <= l_max; ++lp) {
            cplx c(0.0, 0.0);
            if (lp % 2 == 0) {
                cplx inner = (lp == l0) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
                if (l0 % 2 == 1) inner += 2.0 * kI * I_at(lp, l0);
                c = even_front * inner;
            } else {
                cplx inner = (lp == l0) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
                if (l0 % 2 == 0) inner -= 2.0 * kI * I_at(lp, l0);
                c = odd_front * inner;
            }
            field += c * kernel[lp];
        }
        num += std::norm(field);
    }
    return num / denom;
}

}  // namespace qmirror
