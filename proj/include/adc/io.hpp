#pragma once

#include <json.hpp>

#include "adc/homotopy.hpp"
#include "adc/simplicial.hpp"

namespace adc {

using nlohmann::json;

// ADC file format:
// {"name", "max_degree", "basis": [[ids per degree]],
//  "d": {id: [[coef, id], ...]}, "e": {id: int}}
json complex_to_json(const AdcComplex& K);
ComplexPtr complex_from_json(const json& j);

// Morphism file format: {"source": <complex>, "target": <complex>,
//  "action": {id: [[coef, id], ...]}}
json morphism_to_json(const AdcMorphism& f);
AdcMorphism morphism_from_json(const json& j);

// Antihomotopy: {"shift": 1, "from": <morphism>, "to": <morphism>,
//  "action": {...}} with the endpoint complexes shared.
json antihomotopy_to_json(const Antihomotopy& h);
Antihomotopy antihomotopy_from_json(const json& j);

// Simplicial-set format: {"cap", "levels": [[labels]],
//  "faces": [level][i][idx], "degeneracies": [level][i][idx]}.
json sset_to_json(const TruncatedSimplicialSet& X);
TruncatedSimplicialSet sset_from_json(const json& j);

json bisimplicial_to_json(const BisimplicialSet& B);

json cell_to_json(const CellTable& t);
json report_to_json(const ValidationReport& rep);
json homology_to_json(const std::vector<HomologyGroup>& groups);

// Stable serialization: keys sorted (nlohmann object order), two-space
// indent, trailing newline.
std::string dump_stable(const json& j, bool pretty = true);

json load_json(const std::string& path);
void save_json(const json& j, const std::string& path, bool pretty = true);

}  // namespace adc
