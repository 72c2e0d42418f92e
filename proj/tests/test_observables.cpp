#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qmirror/observables.hpp"

using namespace qmirror;
using std::numbers::pi;

TEST_CASE("parameter validation") {
    CHECK_THROWS(CasimirParams(PhaseDistance(1.0), 0.0));
    CHECK_THROWS(CasimirParams(PhaseDistance(1.0), -2.0));
    CHECK(CasimirParams(PhaseDistance(1.0)).kappa == doctest::Approx(1e3));
    CHECK_THROWS(casimir_decomposition(CasimirParams(PhaseDistance(1.0), 0.5)));
    CHECK_THROWS(lamb_direct(CasimirParams(PhaseDistance(1e7), 1e3)));  // kappa a too large
    CHECK_THROWS(casimir_physical(493.0, 15e6, 1e-6));                  // k0 R < 100
}

TEST_CASE("focus decay and shift closed forms") {
    const Displacement focus = Displacement::axial(0.0);
    const DipoleOrientation dx = DipoleOrientation::normalized(1.0, 0.0, 0.0);
    for (double a : {20.0 * pi, 20.5 * pi, 20.0 * pi + 0.4, 33.3}) {
        const MirrorGeometry geom(PhaseDistance(a), pi / 2.0, 1.0);
        CHECK(decay_rate(focus, geom, dx) == doctest::Approx(1.0 - std::cos(2.0 * a)).scale(1.0).epsilon(1e-12));
        CHECK(excited_shift(focus, geom, dx) == doctest::Approx(std::sin(2.0 * a)).scale(1.0).epsilon(1e-12));
    }
    // Partial reflectivity scales both linearly.
    const MirrorGeometry half(PhaseDistance(20.5 * pi), pi / 2.0, 0.5);
    CHECK(decay_rate(focus, half, dx) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("excited shift vanishes outside the cap region") {
    const DipoleOrientation dx = DipoleOrientation::normalized(1.0, 0.0, 0.0);
    const MirrorGeometry open(PhaseDistance(14.0), 1.2, 0.0);  // no reflectivity
    CHECK(excited_shift(Displacement::axial(0.7), open, dx) == 0.0);
}

TEST_CASE("direct spectral integral against an independent Simpson rule") {
    // The panel rule is weakest at small a, where one panel spans a whole
    // oscillation period; measured worst case is 8e-9 relative at a = 0.8.
    for (double a : {0.8, 3.7, 12.0}) {
        for (double kappa : {5.0, 50.0}) {
            const double ref = oracle::simpson(
                [a](double x) {
                    const double s = std::sin(x * a);
                    return s * s * x / (1.0 + x);
                },
                0.0, kappa, 200000);
            CHECK(lamb_direct(CasimirParams(PhaseDistance(a), kappa)) ==
                  doctest::Approx(ref).epsilon(5e-8));
        }
    }
}

TEST_CASE("decomposition identity over random parameters") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ua(10.0 * pi, 200.0 * pi);
    std::uniform_real_distribution<double> ulk(2.0, 4.0);
    for (int t = 0; t < 10; ++t) {
        const CasimirParams p(PhaseDistance(ua(rng)), std::pow(10.0, ulk(rng)));
        const CasimirSplit s = casimir_decomposition(p);  // throws if inconsistent
        const double direct = lamb_direct(p);
        CHECK(s.delta_se + s.delta_fs + s.delta_cp ==
              doctest::Approx(direct).epsilon(1e-6));
    }
}

TEST_CASE("boundary part is cutoff independent at aligned distances") {
    const PhaseDistance a(50.0 * pi);
    const double c1 = casimir_decomposition(CasimirParams(a, 1e3)).delta_cp;
    const double c2 = casimir_decomposition(CasimirParams(a, 2e3)).delta_cp;
    const double c3 = casimir_decomposition(CasimirParams(a, 1e4)).delta_cp;
    CHECK(std::abs(c2 - c1) < 1e-6);
    CHECK(std::abs(c3 - c1) < 1e-6);
    // And the value itself sits on the 1/(8 a^2) envelope at a node.
    CHECK(c1 == doctest::Approx(1.0 / (8.0 * a.value * a.value)).epsilon(1e-2));
}

TEST_CASE("scaling fit") {
    const std::vector<PhaseDistance> a_list = {PhaseDistance(10 * pi), PhaseDistance(32 * pi),
                                               PhaseDistance(100 * pi), PhaseDistance(316 * pi),
                                               PhaseDistance(1000 * pi)};
    const ScalingFit fit = casimir_scaling(a_list, 1e3);
    CHECK(std::abs(fit.cp_slope + 2.0) < 0.05);
    CHECK(fit.plane_slope == -4.0);

    CHECK_THROWS(casimir_scaling({PhaseDistance(10 * pi), PhaseDistance(11 * pi)}, 1e3));
    CHECK_THROWS(casimir_scaling(
        {PhaseDistance(10 * pi), PhaseDistance(20 * pi), PhaseDistance(40 * pi)}, 1e3));  // < 2 decades
    CHECK_THROWS(casimir_scaling(
        {PhaseDistance(10.3 * pi), PhaseDistance(100 * pi), PhaseDistance(1000 * pi)}, 1e3));
    CHECK_THROWS(casimir_scaling(
        {PhaseDistance(2 * pi), PhaseDistance(100 * pi), PhaseDistance(1000 * pi)}, 1e3));
}

TEST_CASE("physical-units shift") {
    const double shift = casimir_physical(493.0, 15e6, 0.01);
    const double a = 2.0 * pi * 0.01 / (493.0 * 1e-9);
    const double cp = casimir_decomposition(CasimirParams(PhaseDistance(a), 1e3)).delta_cp;
    CHECK(shift == doctest::Approx(15e6 * cp).epsilon(1e-14));
    // Magnitude well below the envelope bound gamma_fs / (2a).
    CHECK(std::abs(shift) < 15e6 / (2.0 * a));
}

TEST_CASE("combined result bundle") {
    const QedResult q = qed_result(PhaseDistance(20.5 * pi));
    CHECK(q.gamma_bar == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(std::abs(q.delta_e_bar) < 1e-10);
    CHECK(q.delta_cp_bar != 0.0);
}
