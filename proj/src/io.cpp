#include "adc/io.hpp"

#include <fstream>

namespace adc {

namespace {

json element_to_json(const ChainElement& x) {
    json out = json::array();
    for (const auto& [id, c] : x.terms())
        out.push_back(json::array({c, id}));
    return out;
}

ChainElement element_from_json(const json& j, int degree, const std::string& where) {
    if (!j.is_array())
        throw InputError(where + ": expected an array of [coef, id] pairs");
    ChainElement x(degree);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
            !term[1].is_string())
            throw InputError(where + ": malformed [coef, id] pair");
        x.add_term(term[1].get<std::string>(), term[0].get<Int>());
    }
    return x;
}

}  // namespace

json complex_to_json(const AdcComplex& K) {
    json j;
    j["name"] = K.name;
    j["max_degree"] = K.max_degree;
    json basis = json::array();
    for (const auto& ids : K.basis)
        basis.push_back(ids);
    j["basis"] = basis;
    json d = json::object();
    for (int i = 1; i <= K.max_degree; ++i)
        for (const Id& id : K.basis[i])
            d[id] = element_to_json(K.diff.at(id));
    j["d"] = d;
    json e = json::object();
    for (const Id& id : K.basis.empty() ? std::vector<Id>{} : K.basis[0])
        e[id] = K.aug.at(id);
    j["e"] = e;
    return j;
}

ComplexPtr complex_from_json(const json& j) {
    if (!j.is_object())
        throw InputError("complex: expected an object");
    AdcComplex K;
    try {
        K.name = j.at("name").get<std::string>();
        K.max_degree = j.at("max_degree").get<int>();
        if (K.max_degree < 0)
            throw InputError("complex.max_degree: must be non-negative");
        const json& basis = j.at("basis");
        if (!basis.is_array())
            throw InputError("complex.basis: expected an array of arrays");
        K.basis.resize(K.max_degree + 1);
        if (static_cast<int>(basis.size()) != K.max_degree + 1)
            throw InputError("complex.basis: needs max_degree+1 levels");
        for (int i = 0; i <= K.max_degree; ++i)
            for (const auto& id : basis[i])
                K.basis[i].push_back(id.get<std::string>());
        for (int i = 1; i <= K.max_degree; ++i)
            for (const Id& id : K.basis[i]) {
                if (!j.at("d").contains(id))
                    throw InputError("complex.d." + id + ": missing differential");
                K.diff[id] = element_from_json(j.at("d").at(id), i - 1, "complex.d." + id);
            }
        for (const Id& id : K.basis.empty() ? std::vector<Id>{} : K.basis[0]) {
            if (!j.at("e").contains(id))
                throw InputError("complex.e." + id + ": missing augmentation");
            K.aug[id] = j.at("e").at(id).get<Int>();
        }
    } catch (const json::exception& ex) {
        throw InputError(std::string("complex: ") + ex.what());
    }
    return finalize(std::move(K));
}

json morphism_to_json(const AdcMorphism& f) {
    json j;
    j["source"] = complex_to_json(*f.source);
    j["target"] = complex_to_json(*f.target);
    json action = json::object();
    for (const auto& [id, val] : f.action)
        action[id] = element_to_json(val);
    j["action"] = action;
    return j;
}

AdcMorphism morphism_from_json(const json& j) {
    AdcMorphism f;
    try {
        f.source = complex_from_json(j.at("source"));
        f.target = complex_from_json(j.at("target"));
        for (const auto& [id, val] : j.at("action").items()) {
            if (!f.source->has(id))
                throw InputError("morphism.action." + id + ": unknown source basis element");
            f.action[id] =
                element_from_json(val, f.source->degree(id), "morphism.action." + id);
        }
    } catch (const json::exception& ex) {
        throw InputError(std::string("morphism: ") + ex.what());
    }
    return f;
}

json antihomotopy_to_json(const Antihomotopy& h) {
    json j;
    j["shift"] = 1;
    j["from"] = morphism_to_json(h.from);
    j["to"] = morphism_to_json(h.to);
    json action = json::object();
    for (const auto& [id, val] : h.action)
        action[id] = element_to_json(val);
    j["action"] = action;
    return j;
}

Antihomotopy antihomotopy_from_json(const json& j) {
    Antihomotopy h;
    try {
        if (j.at("shift").get<int>() != 1)
            throw InputError("antihomotopy.shift: expected 1");
        h.from = morphism_from_json(j.at("from"));
        h.to = morphism_from_json(j.at("to"));
        // Share the parsed complexes between the endpoints.
        h.to.source = h.from.source;
        h.to.target = h.from.target;
        for (const auto& [id, val] : j.at("action").items()) {
            if (!h.from.source->has(id))
                throw InputError("antihomotopy.action." + id + ": unknown basis element");
            h.action[id] = element_from_json(val, h.from.source->degree(id) + 1,
                                             "antihomotopy.action." + id);
        }
    } catch (const json::exception& ex) {
        throw InputError(std::string("antihomotopy: ") + ex.what());
    }
    return h;
}

json sset_to_json(const TruncatedSimplicialSet& X) {
    json j;
    j["cap"] = X.cap;
    j["levels"] = X.labels;
    j["faces"] = X.face;
    j["degeneracies"] = X.degen;
    return j;
}

TruncatedSimplicialSet sset_from_json(const json& j) {
    TruncatedSimplicialSet X;
    try {
        X.cap = j.at("cap").get<int>();
        X.labels = j.at("levels").get<std::vector<std::vector<std::string>>>();
        X.face = j.at("faces").get<std::vector<std::vector<std::vector<int>>>>();
        X.degen = j.at("degeneracies").get<std::vector<std::vector<std::vector<int>>>>();
    } catch (const json::exception& ex) {
        throw InputError(std::string("simplicial set: ") + ex.what());
    }
    ValidationReport rep = validate_simplicial(X);
    if (rep.has_input_errors())
        throw InputError("simplicial set: " + rep.to_string());
    return X;
}

json bisimplicial_to_json(const BisimplicialSet& B) {
    json j;
    j["cap_h"] = B.cap_h;
    j["cap_v"] = B.cap_v;
    j["levels"] = B.labels;
    j["faces_h"] = B.face_h;
    j["faces_v"] = B.face_v;
    j["degeneracies_h"] = B.degen_h;
    j["degeneracies_v"] = B.degen_v;
    return j;
}

json cell_to_json(const CellTable& t) {
    json rows = json::array();
    for (int k = 0; k <= t.dimension; ++k)
        rows.push_back(json::array(
            {element_to_json(t.rows[k][0]), element_to_json(t.rows[k][1])}));
    json j;
    j["dimension"] = t.dimension;
    j["rows"] = rows;
    j["augmentation_ok"] = t.augmentation_ok;
    return j;
}

json report_to_json(const ValidationReport& rep) {
    json issues = json::array();
    for (const auto& i : rep.issues) {
        json issue;
        issue["kind"] = i.kind == Issue::Kind::Input ? "input" : "algebra";
        issue["code"] = i.code;
        issue["message"] = i.message;
        issue["witness"] = i.witness;
        issues.push_back(issue);
    }
    json j;
    j["ok"] = rep.ok();
    j["issues"] = issues;
    return j;
}

json homology_to_json(const std::vector<HomologyGroup>& groups) {
    json j = json::array();
    for (const auto& g : groups) {
        json entry;
        entry["degree"] = g.degree;
        entry["free_rank"] = g.free_rank;
        entry["torsion"] = g.torsion;
        j.push_back(entry);
    }
    return j;
}

std::string dump_stable(const json& j, bool pretty) {
    return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw InputError(path + ": " + ex.what());
    }
}

void save_json(const json& j, const std::string& path, bool pretty) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write file: " + path);
    out << dump_stable(j, pretty);
}

}  // namespace adc
