#include "qmirror/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qmirror {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

// j0, j1 in closed form; only used where x is not tiny relative to l.
double j0_closed(double x) { return std::sin(x) / x; }
double j1_closed(double x) { return std::sin(x) / (x * x) - std::cos(x) / x; }

// Miller's algorithm: run the three-term recurrence downward from a start
// order well above both l and x, then normalize against j0 or j1.
double bessel_j_downward(int l, double x) {
    const int extra = 50 + static_cast<int>(std::sqrt(40.0 * l)) + static_cast<int>(0.5 * x);
    const int l_start = std::max(l, static_cast<int>(x)) + extra;

    double p_up = 0.0;  // stand-in for j_{l'+1}
    double p = 1.0;     // stand-in for j_{l'}
    double p_l = 0.0;
    for (int lp = l_start; lp >= 1; --lp) {
        // j_{l'-1} = (2l'+1)/x j_{l'} - j_{l'+1}
        const double p_down = (2.0 * lp + 1.0) / x * p - p_up;
        p_up = p;
        p = p_down;
        if (lp - 1 == l) p_l = p;
        if (std::abs(p) > 1e250) {
            p *= 1e-250;
            p_up *= 1e-250;
            p_l *= 1e-250;
        }
    }
    // After the loop: p corresponds to j_0, p_up to j_1.
    const double j0 = j0_closed(x);
    const double j1 = j1_closed(x);
    // Normalize against whichever closed form is better conditioned.
    const double scale = (std::abs(j0) >= std::abs(j1)) ? j0 / p : j1 / p_up;
    return p_l * scale;
}

double bessel_j_forward(int l, double x) {
    double jm = j0_closed(x);
    if (l == 0) return jm;
    double j = j1_closed(x);
    for (int lp = 1; lp < l; ++lp) {
        double jn = (2.0 * lp + 1.0) / x * j - jm;
        jm = j;
        j = jn;
    }
    return j;
}

}  // namespace

SphericalIndex::SphericalIndex(int l_, int m_) : l(l_), m(m_) {
    if (l < 0 || std::abs(m) > l)
        throw std::invalid_argument("SphericalIndex: require l >= 0 and |m| <= l");
}

double sph_bessel_j(int l, double x) {
    require(l >= 0, "sph_bessel_j: l must be nonnegative");
    require(x >= 0.0, "sph_bessel_j: x must be nonnegative");
    if (x == 0.0) return l == 0 ? 1.0 : 0.0;
    if (static_cast<double>(l) < x) return bessel_j_forward(l, x);
    return bessel_j_downward(l, x);
}

double sph_bessel_y(int l, double x) {
    require(l >= 0, "sph_bessel_y: l must be nonnegative");
    require(x > 0.0, "sph_bessel_y: x must be positive");
    double ym = -std::cos(x) / x;
    if (l == 0) return ym;
    double y = -std::cos(x) / (x * x) - std::sin(x) / x;
    for (int lp = 1; lp < l; ++lp) {
        double yn = (2.0 * lp + 1.0) / x * y - ym;
        ym = y;
        y = yn;
        if (std::isinf(y)) break;  // overflow regime x << l
    }
    return y;
}

std::complex<double> sph_hankel1(int l, double x) {
    return {sph_bessel_j(l, x), sph_bessel_y(l, x)};
}

double assoc_legendre(int l, int m, double u) {
    require(l >= 0, "assoc_legendre: l must be nonnegative");
    require(std::abs(m) <= l, "assoc_legendre: require |m| <= l");
    require(std::abs(u) <= 1.0, "assoc_legendre: require |u| <= 1");
    const int mm = std::abs(m);
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));

    // P_mm^mm = (-1)^mm (2 mm - 1)!! s^mm, then raise l.
    double pmm = 1.0;
    for (int k = 1; k <= mm; ++k) pmm *= -(2.0 * k - 1.0) * s;
    double p = pmm;
    if (l > mm) {
        double pm1 = pmm;
        p = u * (2.0 * mm + 1.0) * pmm;  // P_{mm+1}^{mm}
        for (int lp = mm + 2; lp <= l; ++lp) {
            double pn = ((2.0 * lp - 1.0) * u * p - (lp + mm - 1.0) * pm1) / (lp - mm);
            pm1 = p;
            p = pn;
        }
    }
    if (m >= 0) return p;
    // P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
    double ratio = 1.0;
    for (int k = l - mm + 1; k <= l + mm; ++k) ratio /= k;
    return (mm % 2 == 0 ? 1.0 : -1.0) * ratio * p;
}

std::vector<double> legendre_norm_row(int l_max, int m, double u) {
    require(m >= 0, "legendre_norm_row: m must be nonnegative");
    require(l_max >= m, "legendre_norm_row: l_max must be >= m");
    require(std::abs(u) <= 1.0, "legendre_norm_row: require |u| <= 1");
    std::vector<double> row(l_max + 1, 0.0);
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));

    double pmm = std::sqrt(1.0 / (4.0 * kPi));
    for (int k = 1; k <= m; ++k) pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
    row[m] = pmm;
    if (l_max == m) return row;

    row[m + 1] = u * std::sqrt(2.0 * m + 3.0) * pmm;
    for (int l = m + 2; l <= l_max; ++l) {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
        const double b = std::sqrt(((l - 1.0) * (l - 1.0) - static_cast<double>(m) * m) /
                                   (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
        row[l] = a * (u * row[l - 1] - b * row[l - 2]);
    }
    return row;
}

std::complex<double> sph_harm(const SphericalIndex& lm, double theta, double phi) {
    const int mm = std::abs(lm.m);
    const double pbar = legendre_norm_row(lm.l, mm, std::cos(theta))[lm.l];
    std::complex<double> e = std::polar(1.0, lm.m * phi);
    if (lm.m >= 0) return pbar * e;
    return (mm % 2 == 0 ? 1.0 : -1.0) * pbar * e;
}

std::complex<double> sph_harm(int l, int m, double theta, double phi) {
    return sph_harm(SphericalIndex(l, m), theta, phi);
}

namespace {

// Row of Pbar_l^m(u)/sin(theta) for m >= 1, regular at the poles
// (Pbar_l^m carries a factor sin^m theta).
std::vector<double> legendre_norm_over_s_row(int l_max, int m, double u) {
    std::vector<double> row(l_max + 1, 0.0);
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    double q = std::sqrt(1.0 / (4.0 * kPi));
    for (int k = 1; k <= m; ++k) q *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k));
    for (int k = 1; k < m; ++k) q *= s;  // one power of s fewer than Pbar_m^m
    row[m] = q;
    if (l_max == m) return row;
    row[m + 1] = u * std::sqrt(2.0 * m + 3.0) * q;
    for (int l = m + 2; l <= l_max; ++l) {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
        const double b = std::sqrt(((l - 1.0) * (l - 1.0) - static_cast<double>(m) * m) /
                                   (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
        row[l] = a * (u * row[l - 1] - b * row[l - 2]);
    }
    return row;
}

}  // namespace

MultipoleField multipole_field(MultipoleKind kind, const SphericalIndex& lm,
                               RadialKind radial, double k, double r,
                               double theta, double phi) {
    const int l = lm.l, m = lm.m;
    if (l == 0) throw std::domain_error("multipole_field: no vector mode with l = 0");
    if (r == 0.0) throw std::domain_error("multipole_field: r = 0 is singular");
    require(k > 0.0, "multipole_field: k must be positive");
    require(r > 0.0, "multipole_field: r must be positive");

    const double x = k * r;
    std::complex<double> fl, flm1;
    if (radial == RadialKind::Regular) {
        fl = sph_bessel_j(l, x);
        flm1 = sph_bessel_j(l - 1, x);
    } else {
        fl = sph_hankel1(l, x);
        flm1 = sph_hankel1(l - 1, x);
    }
    // (1/x) d/dx [x f_l(x)] = f_{l-1}(x) - l f_l(x)/x
    const std::complex<double> dri = flm1 - static_cast<double>(l) * fl / x;

    const int mm = std::abs(m);
    const double u = std::cos(theta);
    const double pbar = legendre_norm_row(l, mm, u)[l];
    // d(Pbar_l^m)/dtheta = m cot(theta) Pbar_l^m + sqrt((l-m)(l+m+1)) Pbar_l^{m+1}
    double dtheta = 0.0;
    double m_over_s = 0.0;  // m Pbar_l^m / sin(theta), signed m
    if (mm > 0) {
        const double q = legendre_norm_over_s_row(l, mm, u)[l];
        dtheta = u * mm * q;
        m_over_s = (m >= 0 ? 1.0 : -1.0) * mm * q;
    }
    if (mm + 1 <= l) dtheta += std::sqrt((l - mm) * (l + mm + 1.0)) * legendre_norm_row(l, mm + 1, u)[l];
    const double msign = (m >= 0 || mm % 2 == 0) ? 1.0 : -1.0;  // Y_{l,-m} phase
    const std::complex<double> eimphi = std::polar(msign, m * phi);

    const std::complex<double> y = pbar * eimphi;
    const std::complex<double> dy = dtheta * eimphi;
    const std::complex<double> my_s = m_over_s * eimphi;

    const double lfac = std::sqrt(static_cast<double>(l) * (l + 1.0));
    const std::complex<double> i(0.0, 1.0);

    MultipoleField out;
    if (kind == MultipoleKind::TM) {
        out.e_r = 0.0;
        out.e_theta = -my_s * fl / lfac;
        out.e_phi = -i * fl * dy / lfac;
    } else {
        // Radial phase fixed by transversality (div E = 0) relative to the
        // tangential pair below; the three components form one Maxwell mode.
        out.e_r = lfac / x * fl * y;
        out.e_theta = dri * dy / lfac;
        out.e_phi = i * my_s * dri / lfac;
    }
    return out;
}

namespace {

// Auxiliary functions for the trigonometric integrals at x > 4:
//   Si(x) = pi/2 - f(x) cos x - g(x) sin x
//   Ci(x) = f(x) sin x - g(x) cos x
// Chebyshev-Pade fits in y = 1/x^2, absolute accuracy better than 1e-16
// (coefficients as published on the trigonometric-integral Wikipedia page).
void aux_fg(double x, double& f, double& g) {
    const double y = 1.0 / (x * x);
    f = (1. +
         y * (7.44437068161936700618e2 +
              y * (1.96396372895146869801e5 +
                   y * (2.37750310125431834034e7 +
                        y * (1.43073403821274636888e9 +
                             y * (4.33736238870432522765e10 +
                                  y * (6.40533830574022022911e11 +
                                       y * (4.20968180571076940208e12 +
                                            y * (1.00795182980368574617e13 +
                                                 y * (4.94816688199951963482e12 +
                                                      y * (-4.94701168645415959931e11))))))))))) /
        (x * (1. +
              y * (7.46437068161927678031e2 +
                   y * (1.97865247031583951450e5 +
                        y * (2.41535670165126845144e7 +
                             y * (1.47478952192985464958e9 +
                                  y * (4.58595115847765779830e10 +
                                       y * (7.08501308149515401563e11 +
                                            y * (5.06084464593475076774e12 +
                                                 y * (1.43468549171581016479e13 +
                                                      y * (1.11535493509914254097e13)))))))))));
    g = y * (1. +
             y * (8.1359520115168615e2 +
                  y * (2.35239181626478200e5 +
                       y * (3.12557570795778731e7 +
                            y * (2.06297595146763354e9 +
                                 y * (6.83052205423625007e10 +
                                      y * (1.09049528450362786e12 +
                                           y * (7.57664583257834349e12 +
                                                y * (1.81004487464664575e13 +
                                                     y * (6.43291613143049485e12 +
                                                          y * (-1.36517137670871689e12))))))))))) /
        (1. +
         y * (8.19595201151451564e2 +
              y * (2.40036752835578777e5 +
                   y * (3.26026661647090822e7 +
                        y * (2.23355543278099360e9 +
                             y * (7.87465017341829930e10 +
                                  y * (1.39866710696414565e12 +
                                       y * (1.17164723371736605e13 +
                                            y * (4.01839087307656620e13 +
                                                 y * (3.99653257887490811e13))))))))));
}

// Pade approximation of Si(x) for x^2 <= 16, accuracy better than 1e-16.
double si_pade_small(double x) {
    const double x2 = x * x;
    return x *
           (1. +
            x2 * (-4.54393409816329991e-2 +
                  x2 * (1.15457225751016682e-3 +
                        x2 * (-1.41018536821330254e-5 +
                              x2 * (9.43280809438713025e-8 +
                                    x2 * (-3.53201978997168357e-10 +
                                          x2 * (7.08240282274875911e-13 +
                                                x2 * (-6.05338212010422477e-16)))))))) /
           (1. +
            x2 * (1.01162145739225565e-2 +
                  x2 * (4.99175116169755106e-5 +
                        x2 * (1.55654986308745614e-7 +
                              x2 * (3.28067571055789734e-10 +
                                    x2 * (4.5049097575386581e-13 +
                                          x2 * (3.21107051193712168e-16)))))));
}

}  // namespace

double sin_int(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::abs(x);
    if (ax * ax <= 16.0) return si_pade_small(x);
    double f, g;
    aux_fg(ax, f, g);
    const double si = kPi / 2.0 - f * std::cos(ax) - g * std::sin(ax);
    return x > 0.0 ? si : -si;
}

double cos_int(double x) {
    require(x > 0.0, "cos_int: x must be positive");
    if (x > 4.0) {
        double f, g;
        aux_fg(x, f, g);
        return f * std::sin(x) - g * std::cos(x);
    }
    // Ci(x) = gamma + ln x + sum_{k>=1} (-x^2)^k / (2k (2k)!)
    const long double x2 = static_cast<long double>(x) * x;
    long double sum = 0.0L, term = 1.0L;
    for (int k = 1; k <= 40; ++k) {
        term *= -x2 / ((2.0L * k - 1.0L) * (2.0L * k));
        const long double contrib = term / (2.0L * k);
        sum += contrib;
        if (std::abs(static_cast<double>(contrib)) < 1e-20 * (1.0 + std::abs(static_cast<double>(sum)))) break;
    }
    return kEulerGamma + std::log(x) + static_cast<double>(sum);
}

}  // namespace qmirror
