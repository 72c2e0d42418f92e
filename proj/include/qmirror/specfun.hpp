#pragma once

#include <complex>
#include <vector>

namespace qmirror {

// Index pair (l, m) of a spherical wave, |m| <= l.
struct SphericalIndex {
    int l;
    int m;
    SphericalIndex(int l_, int m_);
};

// TM modes carry no radial electric field component; TE modes do.
enum class MultipoleKind { TM, TE };

// Radial dependence of a multipole: regular j_l or outgoing h_l^(1).
enum class RadialKind { Regular, Outgoing };

// Field components in spherical coordinates at one evaluation point.
struct MultipoleField {
    std::complex<double> e_r;
    std::complex<double> e_theta;
    std::complex<double> e_phi;
};

// Spherical Bessel function j_l(x), x >= 0.
// Backward (Miller) recurrence for x < l, forward recurrence for x > l.
// Stable for l up to at least 500; underflows to 0 for x << l.
double sph_bessel_j(int l, double x);

// Spherical Bessel function of the second kind y_l(x), x > 0.
// Forward recurrence (stable for all l); overflows to -inf for x << l.
double sph_bessel_y(int l, double x);

// Outgoing spherical Hankel function h_l^(1)(x) = j_l(x) + i y_l(x).
std::complex<double> sph_hankel1(int l, double x);

// Associated Legendre function P_l^m(u) with the Condon-Shortley phase,
// unnormalized. m may be negative. Overflows for very large (l, m).
double assoc_legendre(int l, int m, double u);

// Normalized associated Legendre row: out[l] = Pbar_l^m(u) for l in [m, l_max],
// zero below m. Normalization is such that Y_{l,m} = Pbar_l^m(cos theta) e^{i m phi}
// is orthonormal on the sphere. Requires m >= 0. Stable to l of several thousand.
std::vector<double> legendre_norm_row(int l_max, int m, double u);

// Orthonormal spherical harmonic Y_{l,m}(theta, phi), Condon-Shortley phase.
std::complex<double> sph_harm(const SphericalIndex& lm, double theta, double phi);
std::complex<double> sph_harm(int l, int m, double theta, double phi);

// Single vector multipole component set at (r, theta, phi) for wavenumber k.
// The radial function is j_l (Regular) or h_l^(1) (Outgoing). Rejects l = 0
// (no vector mode) and r = 0 (coordinate singularity).
MultipoleField multipole_field(MultipoleKind kind, const SphericalIndex& lm,
                               RadialKind radial, double k, double r,
                               double theta, double phi);

// Sine integral Si(x) = int_0^x sin(t)/t dt, any real x.
double sin_int(double x);

// Cosine integral Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt, x > 0.
double cos_int(double x);

}  // namespace qmirror
