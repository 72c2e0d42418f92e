#pragma once

#include <vector>

#include "qmirror/geometry.hpp"
#include "qmirror/grid.hpp"
#include "qmirror/mirror1d.hpp"

namespace qmirror {

// Ground-state shift integral parameters: mirror phase a = k0 R and the
// dimensionless momentum cutoff kappa = K / k0 > 0.
struct CasimirParams {
    PhaseDistance a;
    double kappa;

    CasimirParams(PhaseDistance a_, double kappa_ = 1e3);
};

// The three exposed normalized observables at one configuration.
struct QedResult {
    double gamma_bar;     // decay rate / free-space rate, in [0, 2] for rho <= 1
    double delta_e_bar;   // excited-state shift / free-space rate
    double delta_cp_bar;  // boundary-induced ground-state shift / free-space rate

    QedResult(double gamma, double de, double dcp);
};

// Decay rate normalized to free space: the vacuum density at k = k0.
// The grid-free overloads build an internally sized quadrature grid.
double decay_rate(const Displacement& r, const MirrorGeometry& geom,
                  const DipoleOrientation& d_hat, const AngularGrid& grid);
double decay_rate(const Displacement& r, const MirrorGeometry& geom,
                  const DipoleOrientation& d_hat);

// Excited-state shift normalized to the free-space decay rate:
//   3 int_hemisphere (dOmega / 4 pi) [1 - |d.O|^2] rho(theta) sin(2(a + k0 O.r)).
// Full-hemisphere focus amplitude is exactly rho.
double excited_shift(const Displacement& r, const MirrorGeometry& geom,
                     const DipoleOrientation& d_hat, const AngularGrid& grid);
double excited_shift(const Displacement& r, const MirrorGeometry& geom,
                     const DipoleOrientation& d_hat);

// Ground-state shift integral for a full hemispherical mirror, atom at focus:
//   int_0^kappa dx x/(1+x) sin^2(x a),
// by panels of length pi/a with a fixed Gauss rule per panel.
// Feasibility bound: kappa * a <= 1e9.
double lamb_direct(const CasimirParams& p);

// Split of lamb_direct into cutoff-divergent and observable pieces:
//   se = (kappa/2) (1 - sin(2 a kappa) / (2 a kappa))   [linear divergence]
//   fs = -(1/2) log(1 + kappa)                          [log divergence]
//   cp = (1/2) [cos 2a (Ci(2a(1+kappa)) - Ci(2a)) + sin 2a (Si(2a(1+kappa)) - Si(2a))]
// The sum reproduces lamb_direct; that identity is checked on every call to
// 1e-6 relative and violation raises an internal-consistency error.
// Requires kappa > 1.
struct CasimirSplit {
    double delta_se;
    double delta_fs;
    double delta_cp;
};
CasimirSplit casimir_decomposition(const CasimirParams& p);

// Log-log slope of |delta_cp| over phase-aligned distances (a = n pi), plus
// the same fit for the encoded plane-mirror reference curve 1/a^4.
// Requires >= 3 samples, all a >= 10 pi, spanning >= 2 decades.
struct ScalingFit {
    double cp_slope;
    double cp_intercept;
    double plane_slope;
};
ScalingFit casimir_scaling(const std::vector<PhaseDistance>& a_list, double kappa = 1e3);

// Dimensional ground-state shift in Hz for transition wavelength lambda (nm),
// free-space rate gamma_fs (Hz) and mirror radius R (m), atom at the focus of
// a full hemispherical mirror. Requires k0 R = 2 pi R / lambda >= 100.
double casimir_physical(double lambda_nm, double gamma_fs_hz, double radius_m,
                        double kappa = 1e3);

// All three normalized observables at the focus of a full hemispherical
// mirror with reflectivity 1 (decay and excited shift are closed forms there).
QedResult qed_result(PhaseDistance a, double kappa = 1e3);

}  // namespace qmirror
