#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "hypsurf/surfaces.hpp"

using namespace hypsurf;

namespace {

std::mt19937 rng(40917);

Word random_word(int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> letter(0, 3);
    static const int alphabet[4] = {1, -1, 2, -2};
    Word w;
    int n = len(rng);
    for (int k = 0; k < n; ++k) w.letters.push_back(alphabet[letter(rng)]);
    return reduce(w);
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("free reduction and inverses") {
    Word w{{1, 2, -2, -1, 1}};
    CHECK(reduce(w) == Word{{1}});
    CHECK(reduce(Word{{1, -1}}).empty());
    CHECK(inverse(Word{{1, -2, -2}}) == Word{{2, 2, -1}});
    for (int k = 0; k < 300; ++k) {
        Word a = random_word(8);
        CHECK(reduce(concat(a, inverse(a))).empty());
    }
}

TEST_CASE("cyclic reduction strips conjugating collars") {
    CHECK(cyclic_reduction(Word{{2, 1, -2}}) == Word{{1}});
    CHECK(cyclic_reduction(Word{{-1, 2, 2, 1}}) == Word{{2, 2}});
    CHECK(cyclic_reduction(Word{{1, -1}}).empty());
}

TEST_CASE("class representative is a conjugacy invariant") {
    for (int k = 0; k < 300; ++k) {
        Word w = random_word(7);
        Word g = random_word(5);
        Word conj = reduce(concat(concat(g, w), inverse(g)));
        CHECK(class_representative(w) == class_representative(conj));
        CHECK(class_representative(w) == class_representative(inverse(w)));
    }
}

TEST_CASE("word order is a strict total order on samples") {
    for (int k = 0; k < 200; ++k) {
        Word a = random_word(6), b = random_word(6);
        if (a == b) {
            CHECK(!word_less(a, b));
        } else {
            CHECK(word_less(a, b) != word_less(b, a));
        }
    }
}

TEST_CASE("primitive class detection") {
    CHECK(is_primitive_class(Word{{1}}));
    CHECK(is_primitive_class(Word{{1, 2}}));
    CHECK(is_primitive_class(Word{{1, 1, 2}}));
    CHECK(!is_primitive_class(Word{{1, 1}}));
    CHECK(!is_primitive_class(Word{{1, 2, 1, 2}}));
    CHECK(!is_primitive_class(Word{{1, 2, 1, 2, 1, 2}}));
    CHECK(!is_primitive_class(Word{}));
    // Conjugates of powers are still powers.
    CHECK(!is_primitive_class(Word{{2, 1, 1, -2}}));
    CHECK(is_primitive_class(Word{{2, 1, -2}}));
}

TEST_CASE("word rendering uses generator labels") {
    FuchsianGroup S = thrice_punctured_sphere();
    CHECK(to_string(Word{}) == "1");
    CHECK(to_string(Word{{1, -2}}) == "g0 g1^-1");
    CHECK(to_string(S, Word{{1, -2}}) == "x gamma^-1");
}

TEST_CASE("ball enumerates each reduced word once in length order") {
    FuchsianGroup S = thrice_punctured_sphere();
    for (int depth = 0; depth <= 6; ++depth) {
        auto entries = ball(S, depth);
        CHECK(static_cast<long long>(entries.size()) == ball_size(2, depth));
        std::set<std::vector<int>> seen;
        std::size_t last = 0;
        for (const auto& e : entries) {
            CHECK(reduce(e.word) == e.word);
            CHECK(e.word.size() >= last);
            last = e.word.size();
            CHECK(seen.insert(e.word.letters).second);
        }
    }
    CHECK(ball_size(2, 0) == 1);
    CHECK(ball_size(2, 1) == 5);
    CHECK(ball_size(2, 6) == 1 + 2 * (729 - 1));
}

TEST_CASE("evaluate multiplies along the word") {
    FuchsianGroup S = thrice_punctured_sphere();
    MoebiusMap m = evaluate(S, Word{{1, -2}});
    MoebiusMap direct = compose(S.generators[0], inverse(S.generators[1]));
    CHECK(same_map(m, direct));
    CHECK(std::fabs(trace(canonical_sign(m))) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK_THROWS_AS(evaluate(S, Word{{3}}), error);
    CHECK_THROWS_AS(evaluate(S, Word{{0}}), error);
}

TEST_CASE("commutator of the equilateral torus is parabolic") {
    FuchsianGroup T = one_holed_torus(3, 3, 3);
    MoebiusMap comm = evaluate(T, Word{{1, 2, -1, -2}});
    CHECK(std::fabs(trace(comm)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(classify(comm) == MapClass::Parabolic);
}

TEST_CASE("conjugacy classes are deduplicated and sorted by length") {
    FuchsianGroup S = thrice_punctured_sphere();
    auto classes = conjugacy_classes(S, 20.0, 6);
    REQUIRE(!classes.empty());
    std::set<std::vector<int>> reps;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        CHECK(classes[k].rep == class_representative(classes[k].rep));
        CHECK(reps.insert(classes[k].rep.letters).second);
        CHECK(classes[k].length ==
              doctest::Approx(2 * std::acosh(std::fabs(classes[k].trace) / 2)).epsilon(1e-12));
        if (k) CHECK(classes[k].length >= classes[k - 1].length - 1e-12);
    }
}

TEST_CASE("no simple closed geodesic exists on the three-cusped sphere") {
    FuchsianGroup S = thrice_punctured_sphere();
    auto classes = conjugacy_classes(S, 20.0, 6);
    REQUIRE(classes.size() >= 10);
    for (auto& cls : classes) {
        cls.simplicity = simplicity(S, cls, 6);
        CHECK(cls.simplicity.kind == SimplicityStatus::NonSimple);
        // Replay the witness: the conjugated axis really crosses.
        Geodesic own = axis(evaluate(S, cls.rep));
        Word moved = concat(concat(cls.simplicity.witness, cls.rep),
                            inverse(cls.simplicity.witness));
        CHECK(geodesics_relation(own, axis(evaluate(S, moved))).kind ==
              GeodesicRelationKind::Crossing);
    }
}

TEST_CASE("simple classes on the equilateral torus are the primitive slopes") {
    FuchsianGroup T = one_holed_torus(3, 3, 3);
    auto classes = conjugacy_classes(T, 20.0, 6);
    int simple_primitive = 0;
    for (auto& cls : classes) {
        cls.simplicity = simplicity(T, cls, 6);
        if (cls.simplicity.kind != SimplicityStatus::Simple) continue;
        CHECK(cls.simplicity.depth == 6);
        if (is_primitive_class(cls.rep)) ++simple_primitive;
        // Proper powers of simple loops share the axis and stay simple.
        if (cls.rep == Word{{1, 1}}) CHECK(!is_primitive_class(cls.rep));
    }
    CHECK(simple_primitive == 12);
    auto square = std::find_if(classes.begin(), classes.end(),
                               [](const ConjClass& c) { return c.rep == Word{{1, 1}}; });
    REQUIRE(square != classes.end());
    CHECK(square->simplicity.kind == SimplicityStatus::Simple);
}

TEST_CASE("cusp normalization is a no-op on the congruence group") {
    FuchsianGroup S = thrice_punctured_sphere();
    FuchsianGroup N = cusp_normalize(S, Word{{1}});
    REQUIRE(N.cusp.has_value());
    CHECK(N.cusp->normalized);
    CHECK(N.cusp->omega == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(same_map(N.generators[0], S.generators[0], 1e-10));
    CHECK(same_map(N.generators[1], S.generators[1], 1e-10));
}

TEST_CASE("cusp width of the equilateral torus is sqrt(6)") {
    FuchsianGroup T = one_holed_torus(3, 3, 3);
    FuchsianGroup N = cusp_normalize(T, Word{{1, 2, -1, -2}});
    REQUIRE(N.cusp.has_value());
    CHECK(N.cusp->omega == doctest::Approx(2.4494897427831781).epsilon(1e-9));
    MoebiusMap per = evaluate(N, N.cusp->peripheral);
    CHECK(std::fabs(per.c) < 1e-9);
    CHECK(std::fabs(std::fabs(per.b) - N.cusp->omega) < 1e-9);
}

TEST_CASE("cusp width survives conjugation") {
    FuchsianGroup T = one_holed_torus(3, 3, 3);
    MoebiusMap g = moebius(2, 1, 1, 1);
    FuchsianGroup Tc = conjugate_group(T, g);
    FuchsianGroup N1 = cusp_normalize(T, Word{{1, 2, -1, -2}});
    FuchsianGroup N2 = cusp_normalize(Tc, Word{{1, 2, -1, -2}});
    CHECK(N1.cusp->omega == doctest::Approx(N2.cusp->omega).epsilon(1e-9));
}

TEST_CASE("maximal cusp of the congruence group is exactly tangent") {
    FuchsianGroup S = thrice_punctured_sphere();
    MaximalCusp cusp = maximal_cusp(S, 6);
    CHECK(cusp.height == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cusp.area == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(cusp.min_c == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(cusp.tangency_confirmed);
    CHECK(!cusp.witness.empty());
}

TEST_CASE("maximal cusp area of the equilateral torus exceeds four") {
    FuchsianGroup N = cusp_normalize(one_holed_torus(3, 3, 3), Word{{1, 2, -1, -2}});
    MaximalCusp cusp = maximal_cusp(N, 6);
    CHECK(cusp.area > 4.0 + 1e-6);
    CHECK(cusp.area == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(cusp.tangency_confirmed);
}

TEST_CASE("maximal cusp area survives conjugation") {
    FuchsianGroup S = thrice_punctured_sphere();
    FuchsianGroup Sc = cusp_normalize(conjugate_group(S, moebius(2, 1, 1, 1)), Word{{1}});
    MaximalCusp moved = maximal_cusp(Sc, 6);
    CHECK(moved.area == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("simple classes stay out of the maximal cusp region") {
    FuchsianGroup N = cusp_normalize(one_holed_torus(3, 3, 3), Word{{1, 2, -1, -2}});
    auto classes = conjugacy_classes(N, 20.0, 6);
    int simple = 0;
    for (auto& cls : classes) {
        cls.simplicity = simplicity(N, cls, 6);
        if (cls.simplicity.kind != SimplicityStatus::Simple) continue;
        ++simple;
        CHECK(cusp_exclusion_check(N, cls));
    }
    CHECK(simple >= 12);
}

}  // TEST_SUITE
