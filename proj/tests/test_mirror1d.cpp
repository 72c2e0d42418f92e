#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qmirror/mirror1d.hpp"

using namespace qmirror;
using std::numbers::pi;

TEST_CASE("phase distance construction") {
    CHECK(PhaseDistance(0.0).value == 0.0);
    CHECK(PhaseDistance::from_radius_wavelengths(1.0).value == doctest::Approx(2.0 * pi));
    CHECK_THROWS(PhaseDistance(-0.1));
}

TEST_CASE("standing-wave intensity") {
    CHECK(mode_intensity_1d(1.0, 0.0, PhaseDistance(pi / 2.0)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(mode_intensity_1d(1.0, 0.0, PhaseDistance(pi)) == doctest::Approx(0.0).scale(1.0));
    // Quarter-wavelength out from a node sits at the antinode.
    CHECK(mode_intensity_1d(1.0, 0.25, PhaseDistance(pi)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS(mode_intensity_1d(0.0, 0.0, PhaseDistance(1.0)));   // k must be positive
    CHECK_THROWS(mode_intensity_1d(1.0, -1.0, PhaseDistance(1.0)));  // behind the mirror
}

TEST_CASE("decay and shift limits") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(std::abs(gamma_1d(PhaseDistance(n * pi))) < 1e-12);
        CHECK(std::abs(shift_1d(PhaseDistance(n * pi / 2.0))) < 1e-12);
    }
    CHECK(gamma_1d(PhaseDistance(pi / 2.0)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(shift_1d(PhaseDistance(pi / 4.0)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rate-shift circle and periodicity") {
    for (double a = 0.0; a < 10.0; a += 0.17) {
        const double g = gamma_1d(PhaseDistance(a)), d = shift_1d(PhaseDistance(a));
        CHECK(std::abs((1.0 - g) * (1.0 - g) + d * d - 1.0) < 1e-12);
        CHECK(std::abs(gamma_1d(PhaseDistance(a + pi)) - g) < 1e-12);
    }
}

TEST_CASE("gamma equals the on-mirror-axis intensity at the atom") {
    for (double a = 0.0; a < 15.0; a += 0.31)
        CHECK(gamma_1d(PhaseDistance(a)) == mode_intensity_1d(1.0, 0.0, PhaseDistance(a)));
}
