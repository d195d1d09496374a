#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "hypsurf/identities.hpp"
#include "hypsurf/invariants.hpp"

namespace hypsurf {

// Insertion-ordered documents keep report bytes stable across runs.
using json = nlohmann::ordered_json;

json group_to_json(const FuchsianGroup& G);
FuchsianGroup group_from_json(const json& doc);
FuchsianGroup load_group_file(const std::string& path);
void save_group_file(const FuchsianGroup& G, const std::string& path);

json word_to_json(const Word& w);
Word word_from_json(const json& doc);

json conj_class_to_json(const ConjClass& cls);
json identity_report_to_json(const IdentityReport& rep);
json injrad_report_to_json(const InjRadReport& rep);
json sup_injrad_report_to_json(const SupInjRadReport& rep);
json systole_report_to_json(const SystoleReport& rep);
json maximal_cusp_to_json(const MaximalCusp& cusp, double omega);
json orthogeodesics_to_json(const std::vector<Orthogeodesic>& arcs);
json torus_spectrum_to_json(const std::vector<SlopeLength>& spectrum);

}  // namespace hypsurf
