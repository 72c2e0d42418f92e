#include "qmirror/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmirror {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: require n >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess for the i-th root of P_n, then Newton.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int l = 2; l <= n; ++l) {
                const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;  // exact central root
}

double AngularGrid::weight(int i_theta, int i_phi) const {
    if (i_phi < 0 || i_phi >= n_phi) throw std::out_of_range("AngularGrid::weight: phi index");
    return w_theta.at(i_theta) * w_phi;
}

AngularGrid make_grid(int n_theta, int n_phi) {
    if (n_theta < 8 || n_phi < 8)
        throw std::invalid_argument("make_grid: require n_theta >= 8 and n_phi >= 8");
    if (n_theta > 100000 || n_phi > 100000)
        throw std::invalid_argument("make_grid: grid size limit exceeded");

    AngularGrid g;
    g.n_theta = n_theta;
    g.n_phi = n_phi;

    std::vector<double> x, w;
    gauss_legendre(n_theta, x, w);
    g.cos_theta.resize(n_theta);
    g.sin_theta.resize(n_theta);
    g.theta.resize(n_theta);
    g.w_theta.resize(n_theta);
    for (int i = 0; i < n_theta; ++i) {
        const double u = 0.5 * (x[i] + 1.0);  // map [-1,1] -> [0,1]
        g.cos_theta[i] = u;
        g.sin_theta[i] = std::sqrt(1.0 - u * u);
        g.theta[i] = std::acos(u);
        g.w_theta[i] = 0.5 * w[i];
    }

    g.phi.resize(n_phi);
    for (int j = 0; j < n_phi; ++j) g.phi[j] = 2.0 * std::numbers::pi * j / n_phi;
    g.w_phi = 2.0 * std::numbers::pi / n_phi;
    return g;
}

AngularGrid make_cap_grid(double alpha, int n_theta, int n_phi) {
    if (!(alpha > 0.0 && alpha <= std::numbers::pi / 2.0 + 1e-15))
        throw std::invalid_argument("make_cap_grid: require alpha in (0, pi/2]");
    if (alpha >= std::numbers::pi / 2.0 - 1e-12) return make_grid(n_theta, n_phi);
    if (n_theta < 8 || n_phi < 8)
        throw std::invalid_argument("make_cap_grid: require n_theta >= 8 and n_phi >= 8");
    if (n_theta > 100000 || n_phi > 100000)
        throw std::invalid_argument("make_cap_grid: grid size limit exceeded");

    const double c = std::cos(alpha);
    std::vector<double> x, w;
    gauss_legendre(n_theta, x, w);

    AngularGrid g;
    g.n_theta = 2 * n_theta;
    g.n_phi = n_phi;
    g.theta.reserve(g.n_theta);
    g.cos_theta.reserve(g.n_theta);
    g.sin_theta.reserve(g.n_theta);
    g.w_theta.reserve(g.n_theta);
    const double edges[3] = {0.0, c, 1.0};
    for (int piece = 0; piece < 2; ++piece) {
        const double lo = edges[piece], hi = edges[piece + 1];
        for (int i = 0; i < n_theta; ++i) {
            const double u = lo + 0.5 * (hi - lo) * (x[i] + 1.0);
            g.cos_theta.push_back(u);
            g.theta.push_back(std::acos(u));
            g.sin_theta.push_back(std::sqrt(std::max(0.0, 1.0 - u * u)));
            g.w_theta.push_back(0.5 * (hi - lo) * w[i]);
        }
    }
    g.phi.resize(n_phi);
    for (int j = 0; j < n_phi; ++j) g.phi[j] = 2.0 * std::numbers::pi * j / n_phi;
    g.w_phi = 2.0 * std::numbers::pi / n_phi;
    return g;
}

}  // namespace qmirror
