#include "hypsurf/json_io.hpp"

#include <fstream>

namespace hypsurf {

json word_to_json(const Word& w) { return json(w.letters); }

Word word_from_json(const json& doc) {
    if (!doc.is_array()) fail(errc::parse_error, "word: expected an array of letters");
    Word w;
    for (const auto& l : doc) w.letters.push_back(l.get<int>());
    return reduce(w);
}

json group_to_json(const FuchsianGroup& G) {
    json doc;
    doc["label"] = G.label;
    json gens = json::array();
    for (const auto& m : G.generators) gens.push_back({m.a, m.b, m.c, m.d});
    doc["generators"] = gens;
    doc["assumed_free"] = G.assumed_free;
    if (G.cusp) {
        doc["cusp"] = {{"omega", G.cusp->omega},
                       {"peripheral", G.cusp->peripheral.letters},
                       {"normalized", G.cusp->normalized}};
    } else {
        doc["cusp"] = nullptr;
    }
    return doc;
}

FuchsianGroup group_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("generators"))
        fail(errc::parse_error, "group: expected an object with a generators array");
    FuchsianGroup G;
    G.label = doc.value("label", std::string{});
    for (const auto& row : doc.at("generators")) {
        if (!row.is_array() || row.size() != 4)
            fail(errc::parse_error, "group: each generator needs 4 entries");
        G.generators.push_back(
            moebius(row[0].get<double>(), row[1].get<double>(), row[2].get<double>(),
                    row[3].get<double>()));
    }
    G.assumed_free = doc.value("assumed_free", true);
    if (doc.contains("cusp") && !doc.at("cusp").is_null()) {
        const auto& c = doc.at("cusp");
        CuspData cusp;
        cusp.omega = c.at("omega").get<double>();
        // Files that record only omega mean the first generator.
        cusp.peripheral = c.contains("peripheral") ? word_from_json(c.at("peripheral"))
                                                   : Word{{1}};
        cusp.normalized = c.value("normalized", false);
        G.cusp = cusp;
    }
    return G;
}

FuchsianGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open group file " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        fail(errc::parse_error, "group file " + path + ": " + e.what());
    }
    return group_from_json(doc);
}

void save_group_file(const FuchsianGroup& G, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot write group file " + path);
    out << group_to_json(G).dump(2) << '\n';
}

json conj_class_to_json(const ConjClass& cls) {
    json doc;
    doc["rep"] = cls.rep.letters;
    doc["trace"] = cls.trace;
    doc["length"] = cls.length;
    json s;
    switch (cls.simplicity.kind) {
        case SimplicityStatus::Simple:
            s["kind"] = "simple";
            s["depth"] = cls.simplicity.depth;
            break;
        case SimplicityStatus::NonSimple:
            s["kind"] = "nonsimple";
            s["depth"] = cls.simplicity.depth;
            s["witness"] = cls.simplicity.witness.letters;
            break;
        case SimplicityStatus::Unknown: s["kind"] = "unknown"; break;
    }
    doc["simplicity"] = s;
    return doc;
}

json identity_report_to_json(const IdentityReport& rep) {
    json doc;
    doc["surface"] = rep.surface;
    doc["identity"] = rep.identity;
    doc["cutoff"] = rep.cutoff;
    doc["depth"] = rep.depth;
    doc["terms"] = rep.terms;
    doc["partial_sum"] = rep.partial_sum;
    doc["targets"] = {{"paper", rep.target_paper}, {"alternative", rep.target_alternative}};
    doc["residuals"] = {{"paper", rep.residual_paper}, {"alternative", rep.residual_alternative}};
    doc["convention_selected"] = rep.convention_selected;
    return doc;
}

json injrad_report_to_json(const InjRadReport& rep) {
    json doc;
    doc["point"] = {{"x", rep.point.x}, {"y", rep.point.y}};
    doc["radius"] = rep.radius;
    json words = json::array();
    for (const auto& w : rep.realizing_words) words.push_back(w.letters);
    doc["realizing_words"] = words;
    doc["depth"] = rep.depth;
    doc["floor_certificate"] = rep.floor_certificate;
    doc["certified"] = rep.certified;
    return doc;
}

json sup_injrad_report_to_json(const SupInjRadReport& rep) {
    json doc;
    doc["lower"] = rep.lower;
    doc["argmax"] = {{"x", rep.argmax.x}, {"y", rep.argmax.y}};
    doc["at_argmax"] = injrad_report_to_json(rep.at_argmax);
    doc["grid"] = rep.grid;
    doc["depth"] = rep.depth;
    return doc;
}

json systole_report_to_json(const SystoleReport& rep) {
    json doc;
    doc["length"] = rep.length;
    doc["shortest"] = conj_class_to_json(rep.shortest);
    if (rep.nonsimple_length) {
        doc["nonsimple_length"] = *rep.nonsimple_length;
        doc["nonsimple_shortest"] = conj_class_to_json(*rep.nonsimple_shortest);
    } else {
        doc["nonsimple_length"] = nullptr;
        doc["nonsimple_shortest"] = nullptr;
    }
    doc["depth"] = rep.depth;
    doc["classes_considered"] = rep.classes_considered;
    return doc;
}

json maximal_cusp_to_json(const MaximalCusp& cusp, double omega) {
    json doc;
    doc["height"] = cusp.height;
    doc["area"] = cusp.area;
    doc["omega"] = omega;
    doc["min_c"] = cusp.min_c;
    doc["witness"] = cusp.witness.letters;
    doc["depth"] = cusp.depth;
    doc["tangency_confirmed"] = cusp.tangency_confirmed;
    return doc;
}

json orthogeodesics_to_json(const std::vector<Orthogeodesic>& arcs) {
    json list = json::array();
    for (const auto& a : arcs)
        list.push_back({{"i", a.i},
                        {"j", a.j},
                        {"length", a.length},
                        {"foot_i", a.foot_i},
                        {"foot_j", a.foot_j}});
    return list;
}

json torus_spectrum_to_json(const std::vector<SlopeLength>& spectrum) {
    json list = json::array();
    for (const auto& s : spectrum)
        list.push_back({{"p", s.p}, {"q", s.q}, {"trace", s.trace}, {"length", s.length}});
    return list;
}

}  // namespace hypsurf
