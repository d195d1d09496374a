#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hypsurf/json_io.hpp"

using namespace hypsurf;

namespace {

std::filesystem::path scratch_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("group round trips through its document form") {
    FuchsianGroup S = thrice_punctured_sphere();
    json doc = group_to_json(S);
    FuchsianGroup back = group_from_json(doc);
    CHECK(back.label == S.label);
    REQUIRE(back.generators.size() == 2);
    CHECK(same_map(back.generators[0], S.generators[0], 1e-15));
    CHECK(same_map(back.generators[1], S.generators[1], 1e-15));
    CHECK(back.assumed_free);
    REQUIRE(back.cusp.has_value());
    CHECK(back.cusp->omega == S.cusp->omega);
    CHECK(back.cusp->peripheral == S.cusp->peripheral);
    CHECK(back.cusp->normalized == S.cusp->normalized);
}

TEST_CASE("cusp entries carrying only omega still load") {
    json doc = {{"label", "bare"},
                {"generators", {{1, 2, 0, 1}, {-1, 0, 2, -1}}},
                {"cusp", {{"omega", 2.0}}}};
    FuchsianGroup G = group_from_json(doc);
    REQUIRE(G.cusp.has_value());
    CHECK(G.cusp->omega == 2.0);
    CHECK(G.cusp->peripheral == Word{{1}});
    CHECK(!G.cusp->normalized);
}

TEST_CASE("group files round trip on disk") {
    auto path = scratch_file("hypsurf_group_roundtrip.json");
    FuchsianGroup T = one_holed_torus(3, 3, 3);
    save_group_file(T, path.string());
    FuchsianGroup back = load_group_file(path.string());
    CHECK(back.label == T.label);
    CHECK(same_map(back.generators[0], T.generators[0], 1e-15));
    CHECK(same_map(back.generators[1], T.generators[1], 1e-15));
    std::remove(path.string().c_str());
    CHECK_THROWS_AS(load_group_file(path.string()), error);
}

TEST_CASE("malformed group documents are rejected") {
    CHECK_THROWS_AS(group_from_json(json::parse("{\"label\": \"x\"}")), error);
    json bad_rows = {{"generators", {{1, 2, 0}}}};
    CHECK_THROWS_AS(group_from_json(bad_rows), error);
}

TEST_CASE("words keep their signed letters") {
    Word w{{1, -2, -2, 1, 1}};
    CHECK(word_from_json(word_to_json(w)) == w);
    CHECK(word_from_json(word_to_json(Word{})) == Word{});
    CHECK_THROWS_AS(word_from_json(json::parse("\"abc\"")), error);
}

TEST_CASE("identity report keys come in a fixed order") {
    IdentityReport rep;
    rep.surface = "pants:2,2,2";
    rep.identity = "bridgeman";
    rep.cutoff = 16;
    rep.depth = 11;
    rep.terms = 42;
    rep.partial_sum = 4.9;
    json doc = identity_report_to_json(rep);
    std::vector<std::string> keys;
    for (const auto& item : doc.items()) keys.push_back(item.key());
    std::vector<std::string> expected = {"surface",     "identity",  "cutoff",
                                         "depth",       "terms",     "partial_sum",
                                         "targets",     "residuals", "convention_selected"};
    CHECK(keys == expected);
    CHECK(doc["targets"].contains("paper"));
    CHECK(doc["targets"].contains("alternative"));
}

TEST_CASE("serialization is byte-stable") {
    FuchsianGroup S = thrice_punctured_sphere();
    auto classes = conjugacy_classes(S, 10.0, 4);
    REQUIRE(!classes.empty());
    classes.front().simplicity = simplicity(S, classes.front(), 4);
    std::string once = conj_class_to_json(classes.front()).dump(2);
    std::string twice = conj_class_to_json(classes.front()).dump(2);
    CHECK(once == twice);
    CHECK(group_to_json(S).dump() == group_to_json(thrice_punctured_sphere()).dump());
}

TEST_CASE("simplicity kinds serialize by name") {
    FuchsianGroup S = thrice_punctured_sphere();
    auto classes = conjugacy_classes(S, 10.0, 4);
    REQUIRE(!classes.empty());
    ConjClass cls = classes.front();
    cls.simplicity = simplicity(S, cls, 4);
    json doc = conj_class_to_json(cls);
    CHECK(doc["simplicity"]["kind"] == "nonsimple");
    CHECK(doc["simplicity"].contains("witness"));
    CHECK(doc.contains("rep"));
    CHECK(doc.contains("trace"));
    CHECK(doc.contains("length"));
}

TEST_CASE("spectra serialize row by row") {
    SurfaceSpec spec = parse_surface_spec("torus1:3,3,3");
    auto spectrum = simple_torus_spectrum(spec, 5.0);
    json doc = torus_spectrum_to_json(spectrum);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == spectrum.size());
    CHECK(doc[0].contains("p"));
    CHECK(doc[0].contains("q"));
    CHECK(doc[0].contains("trace"));
    CHECK(doc[0].contains("length"));

    auto arcs = orthogeodesic_spectrum(parse_surface_spec("pants:2,2,2"), 8, 6);
    json arcs_doc = orthogeodesics_to_json(arcs);
    REQUIRE(arcs_doc.is_array());
    REQUIRE(!arcs_doc.empty());
    for (const char* key : {"i", "j", "length", "foot_i", "foot_j"})
        CHECK(arcs_doc[0].contains(key));
}

}  // TEST_SUITE
