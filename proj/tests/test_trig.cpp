#include <cmath>

#include "doctest.h"
#include "hypsurf/geometry.hpp"
#include "hypsurf/trig.hpp"

using namespace hypsurf;

TEST_SUITE("trig") {

TEST_CASE("collar width at reference lengths") {
    // sinh(l/2) = 1 gives width arcsinh(1); sinh(l/2) = sqrt(3)/2 gives the
    // width arcsinh(2/sqrt(3)).
    CHECK(collar_width(2 * std::asinh(1.0)) ==
          doctest::Approx(0.8813735870195430).epsilon(1e-14));
    CHECK(collar_width(1.5667992369724111) ==
          doctest::Approx(0.9866469610448342).epsilon(1e-12));
    CHECK(collar_width(1.0) > collar_width(2.0));
    CHECK_THROWS_AS(collar_width(0.0), error);
    CHECK_THROWS_AS(collar_width(-1.0), error);
}

TEST_CASE("geodesic loop under a horocyclic loop") {
    CHECK(loop_from_horocycle(2.0) == doctest::Approx(1.7627471740390861).epsilon(1e-14));
    CHECK(loop_from_horocycle(0.5) < loop_from_horocycle(0.6));
    CHECK_THROWS_AS(loop_from_horocycle(0.0), error);
}

TEST_CASE("horocyclic loop length agrees with a translation displacement") {
    // At height y the horocyclic loop around the cusp of z -> z+2 has length
    // 2/y, and the geodesic loop through (0, y) is the segment to (2, y).
    for (double y : {0.8, 1.0, 1.4, 2.0, 3.5}) {
        double geo = dist({0, y}, {2, y});
        CHECK(loop_from_horocycle(2 / y) == doctest::Approx(geo).epsilon(1e-13));
    }
}

TEST_CASE("apex distance closed form at the equilateral corner") {
    // cosh(d) = cosh(arcsinh(sqrt(3)/2)) / sin(pi/3) = sqrt(7/3).
    double d = apex_distance(std::asinh(std::sqrt(3.0) / 2), std::acos(-1.0) / 3);
    CHECK(d == doctest::Approx(std::acosh(std::sqrt(7.0 / 3.0))).epsilon(1e-14));
    CHECK_THROWS_AS(apex_distance(1.0, 0.0), error);
    CHECK_THROWS_AS(apex_distance(1.0, 2.0), error);
}

TEST_CASE("apex distance against an in-plane pentagon") {
    // Build the symmetric pentagon directly: apex at i, lateral sides through
    // the apex at angle half_angle from the vertical, and the far sides cut
    // orthogonally across them. Measure both d and the opposite half-length
    // from the configuration and compare with the closed form.
    const double pi = std::acos(-1.0);
    int checked = 0;
    for (int ki = 0; ki < 32; ++ki) {
        double psi = 0.2 + (1.35 - 0.2) * ki / 31.0;
        double u = std::cos(psi) / std::sin(psi);
        double e_minus = u - 1 / std::sin(psi), e_plus = u + 1 / std::sin(psi);
        MoebiusMap frame = moebius(1, -e_minus, -1, e_plus);
        double phi_apex = pi - psi;
        for (int kj = 0; kj < 32; ++kj) {
            double phi = 0.15 + (phi_apex - 0.3) * kj / 31.0;
            HPoint P{u + std::cos(phi) / std::sin(psi), std::sin(phi) / std::sin(psi)};
            double h = apply(frame, P).y;
            MoebiusMap back = inverse(frame);
            Geodesic cut = Geodesic::through(apply(back, BoundaryPoint::finite(-h)),
                                             apply(back, BoundaryPoint::finite(h)));
            if (cut.e1.at_infinity || cut.e2.at_infinity) continue;
            Geodesic mirrored = Geodesic::through(
                BoundaryPoint::finite(-cut.e1.value), BoundaryPoint::finite(-cut.e2.value));
            GeodesicRelation rel = geodesics_relation(cut, mirrored);
            if (rel.kind != GeodesicRelationKind::Disjoint) continue;
            double c = rel.distance / 2;
            double d = point_to_geodesic({0, 1}, cut);
            CHECK(std::fabs(apex_distance(c, psi) - d) < 1e-9);
            ++checked;
        }
    }
    CHECK(checked >= 300);
}

}  // TEST_SUITE
