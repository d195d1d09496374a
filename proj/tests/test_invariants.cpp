#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "hypsurf/invariants.hpp"
#include "hypsurf/surfaces.hpp"

using namespace hypsurf;

namespace {

std::mt19937 rng(3155728);

double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("injectivity radius on the cusp axis of the congruence group") {
    FuchsianGroup S = thrice_punctured_sphere();
    for (double y : {1.5, 2.0, 2.8}) {
        InjRadReport rep = injrad_at(S, {0, y}, 8);
        // High on the cusp the shortest loop is the translation z -> z+2.
        CHECK(rep.radius == doctest::Approx(std::asinh(1 / y)).epsilon(1e-10));
        bool has_translation = false;
        for (const auto& w : rep.realizing_words)
            has_translation = has_translation || w == Word{{1}} || w == Word{{-1}};
        CHECK(has_translation);
        CHECK(rep.certified);
        CHECK(rep.floor_certificate >= 2 * rep.radius);
    }
    CHECK_THROWS_AS(injrad_at(S, {0, 1}, 0), error);
}

TEST_CASE("injectivity radius is equivariant") {
    FuchsianGroup S = thrice_punctured_sphere();
    MoebiusMap g = moebius(2, 1, 1, 1);
    FuchsianGroup Sc = conjugate_group(S, g);
    for (int k = 0; k < 5; ++k) {
        HPoint p{uniform(-1, 1), uniform(0.6, 2.5)};
        InjRadReport a = injrad_at(S, p, 7);
        InjRadReport b = injrad_at(Sc, apply(g, p), 7);
        CHECK(a.radius == doctest::Approx(b.radius).epsilon(1e-9));
    }
}

TEST_CASE("supremum sweep finds the elliptic fixed point of the modular sibling") {
    FuchsianGroup S = thrice_punctured_sphere();
    SupInjRadReport rep = sup_injrad(S, SamplingBox{}, 60, 3, 8);
    double target = 0.9866469610448342;
    CHECK(std::fabs(rep.lower - target) < 1e-3);
    CHECK(rep.lower <= target + 1e-6);
    CHECK(std::fabs(std::fabs(rep.argmax.x) - 0.5) < 1e-3);
    CHECK(std::fabs(rep.argmax.y - std::sqrt(3.0) / 2) < 1e-3);
    CHECK(rep.at_argmax.realizing_words.size() >= 3);
    CHECK(rep.grid == 60);
}

TEST_CASE("supremum sweep rejects degenerate regions") {
    FuchsianGroup S = thrice_punctured_sphere();
    CHECK_THROWS_AS(sup_injrad(S, SamplingBox{1, -1, 0.1, 3}, 20, 1, 6), error);
    CHECK_THROWS_AS(sup_injrad(S, SamplingBox{-1, 1, -0.5, 3}, 20, 1, 6), error);
    CHECK_THROWS_AS(sup_injrad(S, SamplingBox{}, 1, 1, 6), error);
}

TEST_CASE("systole of the congruence group is doubly arccosh three") {
    FuchsianGroup S = thrice_punctured_sphere();
    SystoleReport rep = systoles(S, 8, 2 * std::cosh(4.0));
    double expected = 3.5254943480781720;
    CHECK(rep.length == doctest::Approx(expected).epsilon(1e-9));
    REQUIRE(rep.nonsimple_length.has_value());
    CHECK(*rep.nonsimple_length == doctest::Approx(expected).epsilon(1e-9));
    CHECK(std::fabs(rep.shortest.trace) == doctest::Approx(6.0).epsilon(1e-9));
    REQUIRE(rep.nonsimple_shortest.has_value());
    CHECK(!rep.nonsimple_shortest->simplicity.witness.empty());
    CHECK(rep.classes_considered > 100);

    // Replay the witness crossing.
    const ConjClass& cls = *rep.nonsimple_shortest;
    Geodesic own = axis(evaluate(S, cls.rep));
    Word moved =
        concat(concat(cls.simplicity.witness, cls.rep), inverse(cls.simplicity.witness));
    CHECK(geodesics_relation(own, axis(evaluate(S, moved))).kind ==
          GeodesicRelationKind::Crossing);
}

TEST_CASE("non-simple geodesics are never shorter than the sharp bound") {
    const double bound = 3.5254943480781720;
    std::vector<FuchsianGroup> groups;
    groups.push_back(thrice_punctured_sphere());
    groups.push_back(one_holed_torus(3, 3, 3));
    groups.push_back(one_holed_torus(3.2, 3.5, 4.1));
    groups.push_back(pair_of_pants(2, 2, 2));
    for (const auto& G : groups) {
        SystoleReport rep = systoles(G, 6, 60.0);
        if (rep.nonsimple_length)
            CHECK(*rep.nonsimple_length >= bound - 1e-9);
    }
}

TEST_CASE("systole lengths survive conjugation") {
    FuchsianGroup S = thrice_punctured_sphere();
    FuchsianGroup Sc = conjugate_group(S, moebius(2, 1, 1, 1));
    SystoleReport a = systoles(S, 6, 30.0);
    SystoleReport b = systoles(Sc, 6, 30.0);
    CHECK(a.length == doctest::Approx(b.length).epsilon(1e-9));
    REQUIRE(a.nonsimple_length.has_value());
    REQUIRE(b.nonsimple_length.has_value());
    CHECK(*a.nonsimple_length == doctest::Approx(*b.nonsimple_length).epsilon(1e-9));
}

TEST_CASE("penetration bound holds on every applicable word") {
    FuchsianGroup S = thrice_punctured_sphere();
    const double rhs = 2 / std::sqrt(3.0);
    int applicable = 0;
    for (const auto& e : ball(S, 6)) {
        if (e.word.empty() || classify(e.map) != MapClass::Hyperbolic) continue;
        Geodesic ax = axis(e.map);
        if (!ax.vertical && !(ax.radius > 1)) continue;
        ++applicable;
        for (int k = 0; k < 100; ++k) {
            HPoint z0{uniform(-1, 1), std::sqrt(3.0) + uniform(0, 2)};
            PenetrationBound pb = axis_penetration_bound(S, e.word, z0);
            CHECK(pb.holds);
            CHECK(pb.lhs > rhs);
        }
    }
    CHECK(applicable >= 10);
}

TEST_CASE("penetration bound rejects bad inputs") {
    FuchsianGroup S = thrice_punctured_sphere();
    Word w{{1, -2}};
    CHECK_THROWS_AS(axis_penetration_bound(S, w, {0, 1.0}), error);
    CHECK_THROWS_AS(axis_penetration_bound(S, Word{{1}}, {0, 2.0}), error);
    FuchsianGroup T = one_holed_torus(3, 3, 3);
    CHECK_THROWS_AS(axis_penetration_bound(T, w, {0, 2.0}), error);
}

}  // TEST_SUITE
