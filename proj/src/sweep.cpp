#include "qmirror/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "qmirror/geometry.hpp"
#include "qmirror/grid.hpp"
#include "qmirror/modefield.hpp"
#include "qmirror/observables.hpp"
#include "qmirror/version.hpp"

namespace qmirror {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Nearest standing-wave node a = n pi (n >= 0).
std::pair<long, double> snap_node(double a_target) {
    long n = std::lround(a_target / kPi);
    n = std::max(0L, n);
    return {n, n * kPi};
}

// Nearest antinode a = (n + 1/2) pi (n >= 0).
std::pair<long, double> snap_antinode(double a_target) {
    long n = std::lround(a_target / kPi - 0.5);
    n = std::max(0L, n);
    return {n, (n + 0.5) * kPi};
}

void put(SweepSpec& spec, const std::string& key, double v) { spec.params[key] = fmt17(v); }
void put(SweepSpec& spec, const std::string& key, long v) { spec.params[key] = std::to_string(v); }
void put(SweepSpec& spec, const std::string& key, int v) { spec.params[key] = std::to_string(v); }

}  // namespace

SweepResult run_fig2(int na_steps, double a_target, double rho,
                     const std::array<double, 3>& dipole, int n_theta, int n_phi) {
    if (na_steps < 10) throw std::invalid_argument("run_fig2: require na_steps >= 10");
    if (!(a_target >= 0.0)) throw std::domain_error("run_fig2: require a >= 0");
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("run_fig2: require rho in [0, 1]");

    const auto [node_n, a_node] = snap_node(a_target);
    const auto [anti_n, a_anti] = snap_antinode(a_target);
    const DipoleOrientation d = DipoleOrientation::normalized(dipole[0], dipole[1], dipole[2]);
    const Displacement focus = Displacement::axial(0.0);

    SweepResult out;
    out.spec.kind = "fig2_na_sweep";
    put(out.spec, "na_steps", na_steps);
    put(out.spec, "a_target", a_target);
    put(out.spec, "a_node", a_node);
    put(out.spec, "node_n", node_n);
    put(out.spec, "a_antinode", a_anti);
    put(out.spec, "antinode_n", anti_n);
    put(out.spec, "rho", rho);
    out.spec.params["dipole"] = fmt17(d.d[0]) + " " + fmt17(d.d[1]) + " " + fmt17(d.d[2]);
    put(out.spec, "grid_theta", n_theta);
    put(out.spec, "grid_phi", n_phi);

    out.header = {"na", "gamma_antinode", "gamma_node"};
    for (int i = 1; i <= na_steps; ++i) {
        const double na = static_cast<double>(i) / na_steps;
        const double alpha = std::asin(na);
        const AngularGrid grid = make_cap_grid(alpha, n_theta, n_phi);
        const double ga =
            decay_rate(focus, MirrorGeometry(PhaseDistance(a_anti), alpha, rho), d, grid);
        const double gn =
            decay_rate(focus, MirrorGeometry(PhaseDistance(a_node), alpha, rho), d, grid);
        out.rows.push_back({na, ga, gn});
    }
    return out;
}

SweepResult run_fig3(const std::string& direction, double a_target, double rho, double alpha,
                     const std::array<double, 3>& dipole, double r_max, int steps,
                     int n_theta, int n_phi) {
    ScanDirection dir;
    if (direction == "axial")
        dir = ScanDirection::Axial;
    else if (direction == "transverse")
        dir = ScanDirection::Transverse;
    else
        throw std::invalid_argument("run_fig3: direction must be 'axial' or 'transverse'");
    if (!(r_max > 0.0)) throw std::domain_error("run_fig3: require r_max > 0");
    if (steps < 2) throw std::invalid_argument("run_fig3: require steps >= 2");
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("run_fig3: require rho in [0, 1]");

    const auto [node_n, a_node] = snap_node(a_target);
    const DipoleOrientation d = DipoleOrientation::normalized(dipole[0], dipole[1], dipole[2]);
    const MirrorGeometry geom(PhaseDistance(a_node), alpha, rho);

    // The integrand oscillates faster further from the focus; keep the grid
    // ahead of the requested scan range.
    const int nt = std::max(n_theta, static_cast<int>(8.0 * r_max) + 16);
    const int np = std::max(n_phi, static_cast<int>(8.0 * r_max) + 16);
    const AngularGrid grid = make_cap_grid(alpha, nt, np);

    SweepResult out;
    out.spec.kind = "fig3_displacement";
    out.spec.params["direction"] = direction;
    put(out.spec, "a_target", a_target);
    put(out.spec, "a_node", a_node);
    put(out.spec, "node_n", node_n);
    put(out.spec, "alpha", alpha);
    put(out.spec, "na", std::sin(alpha));
    put(out.spec, "rho", rho);
    out.spec.params["dipole"] = fmt17(d.d[0]) + " " + fmt17(d.d[1]) + " " + fmt17(d.d[2]);
    put(out.spec, "r_max", r_max);
    put(out.spec, "steps", steps);
    put(out.spec, "grid_theta", nt);
    put(out.spec, "grid_phi", np);

    out.header = {"r_wavelengths", "gamma_bar"};
    for (const ScanPoint& p : density_scan(geom, d, dir, r_max, steps, grid))
        out.rows.push_back({p.r_wavelengths, p.density});
    return out;
}

SweepResult run_fig4(double a_min, double a_max, int steps, double kappa) {
    if (!(a_min >= 10.0 * kPi)) throw std::domain_error("run_fig4: require a_min >= 10 pi");
    if (!(a_max > a_min)) throw std::domain_error("run_fig4: require a_max > a_min");
    if (steps < 2) throw std::invalid_argument("run_fig4: require steps >= 2");
    if (!(kappa > 1.0)) throw std::domain_error("run_fig4: require kappa > 1");

    SweepResult out;
    out.spec.kind = "fig4_distance";
    put(out.spec, "a_min", a_min);
    put(out.spec, "a_max", a_max);
    put(out.spec, "steps", steps);
    put(out.spec, "kappa", kappa);

    out.header = {"a", "gamma_bar", "delta_e_bar", "delta_cp_bar"};
    for (int i = 0; i < steps; ++i) {
        const double a = a_min + (a_max - a_min) * i / (steps - 1);
        const QedResult q = qed_result(PhaseDistance(a), kappa);
        out.rows.push_back({a, q.gamma_bar, q.delta_e_bar, q.delta_cp_bar});
    }
    return out;
}

SweepResult run_scaling(const std::vector<int>& n_list, double kappa) {
    if (n_list.size() < 3) throw std::invalid_argument("run_scaling: need at least three points");
    std::vector<PhaseDistance> a_list;
    for (int n : n_list) {
        if (n < 10) throw std::domain_error("run_scaling: require n >= 10 (a >= 10 pi)");
        a_list.emplace_back(n * kPi);
    }
    const ScalingFit fit = casimir_scaling(a_list, kappa);

    SweepResult out;
    out.spec.kind = "casimir_scaling";
    {
        std::ostringstream ns;
        for (std::size_t i = 0; i < n_list.size(); ++i) ns << (i ? " " : "") << n_list[i];
        out.spec.params["n_list"] = ns.str();
    }
    put(out.spec, "kappa", kappa);
    put(out.spec, "cp_slope", fit.cp_slope);
    put(out.spec, "cp_intercept", fit.cp_intercept);
    put(out.spec, "plane_slope", fit.plane_slope);

    out.header = {"a", "abs_delta_cp", "plane_reference"};
    double anchor_a = 0.0, anchor_cp = 0.0;
    for (std::size_t i = 0; i < a_list.size(); ++i) {
        const double a = a_list[i].value;
        const double cp = std::abs(casimir_decomposition(CasimirParams(a_list[i], kappa)).delta_cp);
        if (i == 0) {
            anchor_a = a;
            anchor_cp = cp;
        }
        const double plane = anchor_cp * std::pow(anchor_a / a, 4.0);
        out.rows.push_back({a, cp, plane});
    }
    return out;
}

std::string to_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "# qmirror " << kVersion << "\n";
    os << "# kind: " << result.spec.kind << "\n";
    for (const auto& [key, value] : result.spec.params) os << "# " << key << ": " << value << "\n";
    for (std::size_t i = 0; i < result.header.size(); ++i)
        os << (i ? "," : "") << result.header[i];
    os << "\n";
    for (const std::vector<double>& row : result.rows) {
        if (row.size() != result.header.size())
            throw std::logic_error("to_csv: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << fmt17(row[i]);
        os << "\n";
    }
    return os.str();
}

std::string to_json(const SweepResult& result) {
    nlohmann::json j;
    j["tool"] = "qmirror";
    j["version"] = kVersion;
    j["kind"] = result.spec.kind;
    j["params"] = result.spec.params;
    j["header"] = result.header;
    j["rows"] = result.rows;
    return j.dump(2) + "\n";
}

}  // namespace qmirror
