#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qmirror/sweep.hpp"

using namespace qmirror;
using std::numbers::pi;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

std::vector<double> parse_csv_row(const std::string& line) {
    std::vector<double> out;
    std::istringstream is(line);
    std::string cell;
    while (std::getline(is, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

}  // namespace

TEST_CASE("na sweep layout and endpoints") {
    const SweepResult r = run_fig2(10, 20.0 * pi, 1.0, {1.0, 0.0, 0.0}, 24, 24);
    CHECK(r.spec.kind == "fig2_na_sweep");
    REQUIRE(r.header == std::vector<std::string>{"na", "gamma_antinode", "gamma_node"});
    REQUIRE(r.rows.size() == 10);
    CHECK(r.rows.front()[0] == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(r.rows.back()[0] == 1.0);
    // Full aperture recovers the one-dimensional limits.
    CHECK(std::abs(r.rows.back()[1] - 2.0) < 1e-8);
    CHECK(std::abs(r.rows.back()[2]) < 1e-8);
    // Snapped distances recorded in the metadata.
    CHECK(r.spec.params.at("node_n") == "20");
    CHECK(std::stod(r.spec.params.at("a_node")) == 20.0 * pi);
    CHECK(r.spec.params.at("antinode_n") == "20");
    CHECK(std::stod(r.spec.params.at("a_antinode")) == 20.5 * pi);
    CHECK(r.spec.params.at("dipole") == "1 0 0");
    CHECK(r.spec.params.count("grid_theta") == 1);

    CHECK_THROWS(run_fig2(9, 20.0 * pi, 1.0, {1.0, 0.0, 0.0}, 24, 24));
    CHECK_THROWS(run_fig2(10, -1.0, 1.0, {1.0, 0.0, 0.0}, 24, 24));
    CHECK_THROWS(run_fig2(10, 20.0 * pi, 1.5, {1.0, 0.0, 0.0}, 24, 24));
}

TEST_CASE("na sweep snaps to the nearest node and antinode") {
    const SweepResult r = run_fig2(10, 62.0, 1.0, {1.0, 0.0, 0.0}, 24, 24);
    CHECK(r.spec.params.at("node_n") == "20");    // 62 / pi = 19.73
    CHECK(r.spec.params.at("antinode_n") == "19");  // nearest (n + 1/2) pi is 19.5 pi
    CHECK(std::stod(r.spec.params.at("a_antinode")) == 19.5 * pi);
}

TEST_CASE("displacement scan layout") {
    const SweepResult r =
        run_fig3("axial", 20.0 * pi, 1.0, pi / 2.0, {1.0, 0.0, 0.0}, 1.0, 5, 16, 16);
    CHECK(r.spec.kind == "fig3_displacement");
    REQUIRE(r.header == std::vector<std::string>{"r_wavelengths", "gamma_bar"});
    REQUIRE(r.rows.size() == 5);
    CHECK(r.rows.front()[0] == 0.0);
    CHECK(r.rows.back()[0] == 1.0);
    CHECK(std::abs(r.rows.front()[1]) < 1e-8);  // node at the focus
    CHECK(r.spec.params.at("direction") == "axial");
    CHECK(std::stod(r.spec.params.at("na")) == doctest::Approx(1.0).epsilon(1e-15));
    // Grid auto-bumped past the requested 16 to track the scan range.
    CHECK(std::stod(r.spec.params.at("grid_theta")) >= 24);

    const SweepResult t =
        run_fig3("transverse", 20.0 * pi, 1.0, pi / 2.0, {1.0, 0.0, 0.0}, 1.0, 5, 16, 16);
    CHECK(t.rows.front()[1] == doctest::Approx(r.rows.front()[1]).scale(1.0).epsilon(1e-12));

    CHECK_THROWS(run_fig3("upward", 20.0 * pi, 1.0, pi / 2.0, {1.0, 0.0, 0.0}, 1.0, 5, 16, 16));
    CHECK_THROWS(run_fig3("axial", 20.0 * pi, 1.0, pi / 2.0, {1.0, 0.0, 0.0}, 0.0, 5, 16, 16));
    CHECK_THROWS(run_fig3("axial", 20.0 * pi, 1.0, pi / 2.0, {1.0, 0.0, 0.0}, 1.0, 1, 16, 16));
    CHECK_THROWS(run_fig3("axial", 20.0 * pi, 1.5, pi / 2.0, {1.0, 0.0, 0.0}, 1.0, 5, 16, 16));
}

TEST_CASE("distance sweep layout") {
    const SweepResult r = run_fig4(10.0 * pi, 14.0 * pi, 5, 1e3);
    CHECK(r.spec.kind == "fig4_distance");
    REQUIRE(r.header ==
            std::vector<std::string>{"a", "gamma_bar", "delta_e_bar", "delta_cp_bar"});
    REQUIRE(r.rows.size() == 5);
    CHECK(r.rows.front()[0] == 10.0 * pi);
    CHECK(r.rows.back()[0] == doctest::Approx(14.0 * pi).epsilon(1e-15));
    for (const auto& row : r.rows) {
        // Every sampled a here is an integer multiple of pi: a node.
        CHECK(std::abs(row[1]) < 1e-8);
        CHECK(std::abs(row[2]) < 1e-8);
        CHECK(row[3] > 0.0);
    }
    CHECK(r.rows.back()[3] < r.rows.front()[3]);  // boundary shift falls off with distance

    CHECK_THROWS(run_fig4(5.0 * pi, 14.0 * pi, 5, 1e3));
    CHECK_THROWS(run_fig4(10.0 * pi, 10.0 * pi, 5, 1e3));
    CHECK_THROWS(run_fig4(10.0 * pi, 14.0 * pi, 1, 1e3));
    CHECK_THROWS(run_fig4(10.0 * pi, 14.0 * pi, 5, 1.0));
}

TEST_CASE("scaling sweep anchors the reference curve") {
    const SweepResult r = run_scaling({10, 100, 1000}, 1e3);
    CHECK(r.spec.kind == "casimir_scaling");
    REQUIRE(r.header == std::vector<std::string>{"a", "abs_delta_cp", "plane_reference"});
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0][2] == r.rows[0][1]);  // anchored at the first point
    CHECK(r.rows[2][2] == doctest::Approx(r.rows[0][1] * 1e-8).epsilon(1e-12));
    CHECK(std::abs(std::stod(r.spec.params.at("cp_slope")) + 2.0) < 0.05);
    CHECK(std::stod(r.spec.params.at("plane_slope")) == -4.0);
    CHECK(r.spec.params.at("n_list") == "10 100 1000");

    CHECK_THROWS(run_scaling({10, 100}, 1e3));
    CHECK_THROWS(run_scaling({5, 100, 1000}, 1e3));
}

TEST_CASE("csv serialization") {
    const SweepResult r = run_fig4(10.0 * pi, 14.0 * pi, 3, 1e3);
    const std::string csv = to_csv(r);
    const std::vector<std::string> lines = split_lines(csv);

    REQUIRE(lines.size() >= 3);
    CHECK(lines[0].rfind("# qmirror ", 0) == 0);
    CHECK(lines[1] == "# kind: fig4_distance");
    std::size_t i = 2;
    while (i < lines.size() && lines[i].rfind("# ", 0) == 0) ++i;
    REQUIRE(i + 1 + r.rows.size() == lines.size());  // header line + data rows
    CHECK(lines[i - 1] == "# steps: 3");  // metadata keys in sorted order, 'steps' last
    CHECK(lines[i] == "a,gamma_bar,delta_e_bar,delta_cp_bar");

    // %.17g round-trips every double exactly.
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
        const std::vector<double> parsed = parse_csv_row(lines[i + 1 + k]);
        REQUIRE(parsed.size() == r.rows[k].size());
        for (std::size_t j = 0; j < parsed.size(); ++j) CHECK(parsed[j] == r.rows[k][j]);
    }
}

TEST_CASE("csv rejects ragged rows") {
    SweepResult bad;
    bad.spec.kind = "fig4_distance";
    bad.header = {"a", "b"};
    bad.rows = {{1.0, 2.0}, {3.0}};
    CHECK_THROWS_AS((void)to_csv(bad), std::logic_error);
}

TEST_CASE("serialization is deterministic") {
    const SweepResult r1 = run_fig2(10, 20.0 * pi, 1.0, {1.0, 0.0, 0.0}, 24, 24);
    const SweepResult r2 = run_fig2(10, 20.0 * pi, 1.0, {1.0, 0.0, 0.0}, 24, 24);
    CHECK(to_csv(r1) == to_csv(r2));
    CHECK(to_json(r1) == to_json(r2));
}

TEST_CASE("json serialization") {
    const SweepResult r = run_scaling({10, 100, 1000}, 1e3);
    const nlohmann::json j = nlohmann::json::parse(to_json(r));
    CHECK(j.at("tool") == "qmirror");
    CHECK(j.at("kind") == "casimir_scaling");
    CHECK(j.at("header").size() == 3);
    CHECK(j.at("rows").size() == 3);
    CHECK(j.at("params").at("n_list") == "10 100 1000");
    CHECK(j.at("rows")[0][1].get<double>() == r.rows[0][1]);
}
