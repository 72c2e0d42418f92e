#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qmirror {

// Resolved parameters of one sweep invocation. Keys and values land verbatim
// in the output metadata so every run is reproducible from its own file.
struct SweepSpec {
    std::string kind;  // fig2_na_sweep | fig3_displacement | fig4_distance | casimir_scaling
    std::map<std::string, std::string> params;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// Decay at the focus versus numerical aperture, at the standing-wave node and
// antinode (a snapped to the nearest n pi and (n + 1/2) pi; the snapped values
// are reported in the metadata). Columns: na, gamma_antinode, gamma_node.
SweepResult run_fig2(int na_steps, double a_target, double rho,
                     const std::array<double, 3>& dipole, int n_theta, int n_phi);

// Decay versus displacement from the focus in a node configuration
// (a snapped to the nearest n pi), half-aperture alpha (pi/2 = full
// hemisphere). Columns: r_wavelengths, gamma_bar.
SweepResult run_fig3(const std::string& direction, double a_target, double rho, double alpha,
                     const std::array<double, 3>& dipole, double r_max, int steps,
                     int n_theta, int n_phi);

// Focus observables versus mirror phase distance for a full hemispherical
// mirror. Columns: a, gamma_bar, delta_e_bar, delta_cp_bar.
SweepResult run_fig4(double a_min, double a_max, int steps, double kappa);

// Casimir-Polder magnitude and the plane-mirror reference on phase-aligned
// distances a = n pi. Columns: a, abs_delta_cp, plane_reference.
SweepResult run_scaling(const std::vector<int>& n_list, double kappa);

// CSV with a '#'-prefixed metadata block, a header row, and %.17g values.
// Fully deterministic: no timestamps, fixed key order.
std::string to_csv(const SweepResult& result);

// Same content as a JSON document.
std::string to_json(const SweepResult& result);

}  // namespace qmirror
