#pragma once

#include <cstddef>
#include <vector>

namespace qmirror {

// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
// Weights sum to 2 within roundoff.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Product quadrature over the hemisphere theta in [0, pi/2], phi in [0, 2 pi):
// Gauss-Legendre in u = cos(theta) on [0, 1] crossed with a uniform periodic
// rule in phi. Total weight sums to 2 pi (the hemisphere solid angle).
// Exact for spherical harmonics up to degree 2 n_theta - 2 (and |m| < n_phi).
struct AngularGrid {
    int n_theta = 0;
    int n_phi = 0;
    std::vector<double> theta;         // size n_theta
    std::vector<double> cos_theta;     // u_i, ascending
    std::vector<double> sin_theta;
    std::vector<double> w_theta;       // sums to 1 (integrates du on [0,1])
    std::vector<double> phi;           // size n_phi, uniform starting at 0
    double w_phi = 0.0;                // 2 pi / n_phi per node

    double weight(int i_theta, int i_phi) const;
    std::size_t node_count() const { return static_cast<std::size_t>(n_theta) * n_phi; }
};

// Build the hemisphere grid; requires n_theta >= 8 and n_phi >= 8.
AngularGrid make_grid(int n_theta, int n_phi);

// Hemisphere grid whose u-nodes avoid straddling a cap edge at theta = alpha:
// Gauss-Legendre on [cos(alpha), 1] and [0, cos(alpha)] separately (n_theta
// nodes each), so integrands with a step at the edge are handled exactly
// piecewise. Degenerates to make_grid when alpha is the full hemisphere.
AngularGrid make_cap_grid(double alpha, int n_theta, int n_phi);

}  // namespace qmirror
