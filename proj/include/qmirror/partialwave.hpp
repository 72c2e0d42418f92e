#pragma once

#include <complex>
#include <vector>

#include "qmirror/geometry.hpp"
#include "qmirror/grid.hpp"
#include "qmirror/mirror1d.hpp"

namespace qmirror {

// Dense complex coefficient set c_{l,m}, 0 <= l <= l_max, |m| <= l.
class PartialWaveSet {
  public:
    explicit PartialWaveSet(int l_max);

    int l_max() const { return l_max_; }
    std::complex<double>& at(int l, int m);
    const std::complex<double>& at(int l, int m) const;
    std::size_t size() const { return coeffs_.size(); }

  private:
    int l_max_;
    std::vector<std::complex<double>> coeffs_;  // index l^2 + l + m
};

// Complex far-field amplitude sampled on an AngularGrid (theta-major order:
// values[i_theta * n_phi + i_phi]).
struct ScatteringAmplitude {
    std::vector<std::complex<double>> values;
};

enum class Parity { Even, Odd };

// Partial sum of l(l+1)(2l+1) j_l^2(kr) / (kr)^2 over l = 1..l_max.
// Converges to 2/3 once l_max comfortably exceeds kr; emits a diagnostic on
// stderr when the truncation tail estimate exceeds 1e-10.
double addition_sum(double kr, int l_max);

// Same sum restricted to even or odd l. The two parities add up to the total.
double parity_sum(double kr, Parity parity, int l_max);

// Hemisphere overlap of same-m orthonormal Legendre profiles with the parity
// sign factor: (-1)^((l + l' + 1)/2) * 2 pi * int_0^1 Pbar_l^m Pbar_l'^m du.
// Defined for opposite-parity (l + l' odd) pairs only; |m| <= min(l, l').
double overlap_I(int l_prime, int l, int m);

// Far-field mirror map b -> c for a full hemispherical mirror at phase
// distance a. Even l': c = e^{ia} cos a [b_{l'} + 2i sum_{odd l} b_{l,m} I];
// odd l': c = -i e^{ia} sin a [b_{l'} - 2i sum_{even l} b_{l,m} I].
// The cross-term weight and the odd-sector phase are fixed by the free-space
// limit (c = b when the mirror is removed) and by flux conservation.
PartialWaveSet hemisphere_map(const PartialWaveSet& b, PhaseDistance a);

// Even/odd far-field amplitudes f^{e/o} = sum b_l i^l Y_{l,m} and the
// in/out combinations f_in = (i/2)(f^o - f^e), f_out = (i/2)(f^o + f^e),
// sampled on the grid. They satisfy f_out(omega) = -f_in(-omega).
struct ParityAmplitudes {
    ScatteringAmplitude f_even, f_odd, f_in, f_out;
};
ParityAmplitudes parity_amplitudes(const PartialWaveSet& b, const AngularGrid& grid);

// Region-I far-field amplitudes for a mirror cap of half-aperture alpha
// (T(theta) = 0 on the cap, 1 outside; alpha = 0 means no mirror):
//   g^o = T f^o - 2 (1-T) e^{ia} sin a f_in,
//   g^e = T f^e + 2i (1-T) e^{ia} cos a f_in.
// With alpha = 0 this reduces to g = f; with alpha = pi/2 it is the
// amplitude-level form of hemisphere_map.
struct ScatteredAmplitudes {
    ScatteringAmplitude g_even, g_odd;
};
ScatteredAmplitudes scattered_amplitudes(const PartialWaveSet& b, PhaseDistance a,
                                         double alpha, const AngularGrid& grid);

// Brute-force normalized vacuum density at signed axial displacement
// r (wavelengths) from the focus, for a radially oriented dipole and a full
// hemispherical mirror (alpha = pi/2 required; rho must be 0 or 1; the dipole
// must point along the axis, i.e. radially for an on-axis atom).
// Every scalar basis mode (l0, m=0), l0 <= l_max, is pushed through the
// mirror map; the field at the atom is rebuilt from the radial components of
// the l >= 1 vector modes; squared magnitudes are summed and divided by the
// same sum for the identity map. Requires l_max >= 2 pi |r| + 40.
double oracle_density(const MirrorGeometry& geom, const DipoleOrientation& d_hat,
                      double r_axial_wavelengths, int l_max);

}  // namespace qmirror
