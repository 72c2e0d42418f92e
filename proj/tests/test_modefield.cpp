#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qmirror/modefield.hpp"

using namespace qmirror;
using std::numbers::pi;

namespace {
// (3 / 4 pi) int_cap (1 - (x.O)^2) dOmega for a transverse dipole.
double cap_weight_x(double alpha) {
    const double c = std::cos(alpha);
    return 1.0 - 0.75 * c - 0.25 * c * c * c;
}
// Same for an axial dipole.
double cap_weight_z(double alpha) {
    const double c = std::cos(alpha);
    return 1.0 - 1.5 * c + 0.5 * c * c * c;
}
}  // namespace

TEST_CASE("geometry construction") {
    CHECK(MirrorGeometry(PhaseDistance(1.0), pi / 2.0, 1.0).na() == doctest::Approx(1.0));
    CHECK(MirrorGeometry::from_na(PhaseDistance(1.0), 0.4, 0.5).alpha ==
          doctest::Approx(std::asin(0.4)));
    CHECK_THROWS(MirrorGeometry(PhaseDistance(1.0), 0.0, 1.0));
    CHECK_THROWS(MirrorGeometry(PhaseDistance(1.0), 2.0, 1.0));
    CHECK_THROWS(MirrorGeometry(PhaseDistance(1.0), 1.0, 1.5));
    CHECK_THROWS(MirrorGeometry::from_na(PhaseDistance(1.0), 0.0, 1.0));
}

TEST_CASE("dipole and displacement validation") {
    CHECK_THROWS(DipoleOrientation({0.5, 0.5, 0.5}));
    CHECK_THROWS(DipoleOrientation::normalized(0.0, 0.0, 0.0));
    const DipoleOrientation d = DipoleOrientation::normalized(3.0, 0.0, 4.0);
    CHECK(d.d[0] == doctest::Approx(0.6));
    CHECK(d.d[2] == doctest::Approx(0.8));
    CHECK_THROWS(Displacement({101.0, 0.0, 0.0}));
    CHECK(Displacement::axial(-2.0).r_wavelengths[2] == -2.0);
    CHECK(Displacement::transverse(1.5).r_wavelengths[0] == 1.5);
}

TEST_CASE("grid construction and weights") {
    const AngularGrid g = make_grid(16, 20);
    double acc = 0.0;
    for (int i = 0; i < g.n_theta; ++i)
        for (int j = 0; j < g.n_phi; ++j) acc += g.weight(i, j);
    CHECK(acc == doctest::Approx(2.0 * pi).epsilon(1e-14));
    CHECK_THROWS(make_grid(4, 20));
    CHECK_THROWS(make_grid(16, 4));
    CHECK_THROWS(g.weight(0, 25));

    const AngularGrid cap = make_cap_grid(0.8, 16, 16);
    CHECK(cap.n_theta == 32);
    double cacc = 0.0;
    for (int i = 0; i < cap.n_theta; ++i)
        for (int j = 0; j < cap.n_phi; ++j) cacc += cap.weight(i, j);
    CHECK(cacc == doctest::Approx(2.0 * pi).epsilon(1e-14));
}

TEST_CASE("free-space density is one") {
    std::mt19937 rng(9);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const MirrorGeometry geom(PhaseDistance(7.7), 1.1, 0.0);
    const AngularGrid grid = make_grid(32, 32);
    for (int t = 0; t < 20; ++t) {
        const DipoleOrientation d =
            DipoleOrientation::normalized(gauss(rng), gauss(rng), gauss(rng));
        const Displacement r({gauss(rng), gauss(rng), gauss(rng)});
        CHECK(vacuum_density(1.0, r, geom, d, grid) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("focus density matches the cap integral") {
    const Displacement focus = Displacement::axial(0.0);
    const DipoleOrientation dx = DipoleOrientation::normalized(1.0, 0.0, 0.0);
    const DipoleOrientation dz = DipoleOrientation::normalized(0.0, 0.0, 1.0);
    for (double na : {0.3, 0.6, 0.9, 1.0}) {
        const double alpha = std::asin(na);
        const AngularGrid grid = make_cap_grid(alpha, 32, 32);
        // Node: D = 1 - rho * s(alpha); antinode: D = 1 + rho * s(alpha).
        const MirrorGeometry node(PhaseDistance(20.0 * pi), alpha, 0.8);
        const MirrorGeometry anti(PhaseDistance(20.5 * pi), alpha, 0.8);
        CHECK(vacuum_density(1.0, focus, node, dx, grid) ==
              doctest::Approx(1.0 - 0.8 * cap_weight_x(alpha)).epsilon(1e-12));
        CHECK(vacuum_density(1.0, focus, anti, dx, grid) ==
              doctest::Approx(1.0 + 0.8 * cap_weight_x(alpha)).epsilon(1e-12));
        CHECK(vacuum_density(1.0, focus, node, dz, grid) ==
              doctest::Approx(1.0 - 0.8 * cap_weight_z(alpha)).epsilon(1e-12));
    }
}

TEST_CASE("off-focus density against a dense reference grid") {
    const MirrorGeometry geom(PhaseDistance(20.0 * pi), pi / 2.0, 1.0);
    const DipoleOrientation d = DipoleOrientation::normalized(0.6, 0.0, 0.8);
    const Displacement r({0.4, -0.3, 1.1});
    const double coarse = vacuum_density(1.0, r, geom, d, make_grid(48, 48));
    const double fine = vacuum_density(1.0, r, geom, d, make_grid(160, 160));
    CHECK(coarse == doctest::Approx(fine).epsilon(1e-10));
}

TEST_CASE("density is affine in reflectivity") {
    const MirrorGeometry g0(PhaseDistance(31.2), 0.9, 0.0);
    const MirrorGeometry g1(PhaseDistance(31.2), 0.9, 1.0);
    const MirrorGeometry gm(PhaseDistance(31.2), 0.9, 0.41);
    const DipoleOrientation d = DipoleOrientation::normalized(0.0, 1.0, 0.0);
    const Displacement r({-0.2, 0.1, 0.6});
    const AngularGrid grid = make_cap_grid(0.9, 48, 48);
    const double d0 = vacuum_density(1.0, r, g0, d, grid);
    const double d1 = vacuum_density(1.0, r, g1, d, grid);
    const double dm = vacuum_density(1.0, r, gm, d, grid);
    CHECK(dm == doctest::Approx(d0 + 0.41 * (d1 - d0)).epsilon(1e-13));
}

TEST_CASE("density scan shape and endpoints") {
    const MirrorGeometry geom(PhaseDistance(20.0 * pi), pi / 2.0, 1.0);
    const DipoleOrientation d = DipoleOrientation::normalized(1.0, 0.0, 0.0);
    const AngularGrid grid = make_grid(32, 32);
    const auto scan = density_scan(geom, d, ScanDirection::Axial, 2.0, 21, grid);
    CHECK(scan.size() == 21);
    CHECK(scan.front().r_wavelengths == 0.0);
    CHECK(scan.back().r_wavelengths == doctest::Approx(2.0));
    CHECK(scan.front().density < 1e-10);  // node at the focus
    CHECK_THROWS(density_scan(geom, d, ScanDirection::Axial, 2.0, 1, grid));
    CHECK_THROWS(density_scan(geom, d, ScanDirection::Axial, -1.0, 5, grid));
}

TEST_CASE("scan directions move along the advertised axes") {
    const MirrorGeometry geom(PhaseDistance(20.0 * pi), pi / 2.0, 1.0);
    const DipoleOrientation d = DipoleOrientation::normalized(1.0, 0.0, 0.0);
    const AngularGrid grid = make_grid(32, 32);
    const auto ax = density_scan(geom, d, ScanDirection::Axial, 0.5, 3, grid);
    const auto tr = density_scan(geom, d, ScanDirection::Transverse, 0.5, 3, grid);
    CHECK(ax[2].density == doctest::Approx(vacuum_density(1.0, Displacement::axial(0.5), geom, d, grid)));
    CHECK(tr[2].density ==
          doctest::Approx(vacuum_density(1.0, Displacement::transverse(0.5), geom, d, grid)));
}
