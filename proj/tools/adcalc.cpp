// adcalc: command-line front end for the directed-complex calculator.
// Exit codes: 0 all checks passed, 1 a check failed, 2 malformed input.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "adc/acceptance.hpp"
#include "adc/io.hpp"
#include "adc/slice_transfer.hpp"

using namespace adc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct GlobalFlags {
    bool pretty = false;
    bool timing = false;
    int jobs = 1;
    std::string output;
};

void emit(const json& j, const GlobalFlags& flags) {
    if (flags.output.empty())
        std::cout << dump_stable(j, flags.pretty);
    else
        save_json(j, flags.output, flags.pretty);
}

json verdict(bool ok, json details, const GlobalFlags& flags,
             std::chrono::steady_clock::time_point start) {
    json j;
    j["ok"] = ok;
    j["details"] = std::move(details);
    if (flags.timing)
        j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return j;
}

SimplexMap parse_phi(const std::string& text, int n) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        values.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (static_cast<int>(values.size()) != n + 1)
        throw InputError("phi needs exactly n+1 values");
    return SimplexMap(n, 1, std::move(values));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for based augmented directed complexes:\n"
                 "tensor and join products, orientals, diagonals, bounded cell\n"
                 "and morphism enumeration, simplicial slices, and the\n"
                 "deformation-retract verification suite."};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--pretty", flags.pretty, "indent JSON output");
    app.add_flag("--timing", flags.timing, "include elapsed_ms in verdicts");
    app.add_option("--jobs", flags.jobs, "worker threads for enumeration")->default_val(1);
    app.add_option("-o,--output", flags.output, "write the result to a file");

    std::string in_a, in_b, phi_text;
    int arg_n = 0, arg_m = 0, arg_i = 0;
    int trunc = 2, dim = 0, up_to = 0, cap_h = 1, cap_v = 1, level = 0, index = 0;
    Int coeff_cap = 3;
    int degree_cap = default_degree_cap();
    bool check = false, reduced = false, as_morphism = false;
    std::string side_name = "oplax", mode = "under", anchor_path;

    auto* validate_cmd = app.add_subcommand("validate", "validate a complex or morphism file");
    validate_cmd->add_option("file", in_a)->required();
    validate_cmd->add_flag("--morphism", as_morphism, "treat the file as a morphism");

    auto* classify_cmd = app.add_subcommand("classify", "unital / strongly loop-free flags");
    classify_cmd->add_option("file", in_a)->required();

    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two complexes");
    tensor_cmd->add_option("left", in_a)->required();
    tensor_cmd->add_option("right", in_b)->required();
    tensor_cmd->add_option("--cap", degree_cap, "total degree cap");

    auto* join_cmd = app.add_subcommand("join", "join of two complexes");
    join_cmd->add_option("left", in_a)->required();
    join_cmd->add_option("right", in_b)->required();
    join_cmd->add_option("--cap", degree_cap, "total degree cap");

    auto* disk_cmd = app.add_subcommand("disk", "globular disk complex");
    disk_cmd->add_option("i", arg_i)->required();

    auto* oriental_cmd = app.add_subcommand("oriental", "oriental complex of a simplex");
    oriental_cmd->add_option("n", arg_n)->required();

    auto* aw_cmd = app.add_subcommand("aw", "tuple-splitting diagonal of an oriental");
    aw_cmd->add_option("n", arg_n)->required();
    aw_cmd->add_option("--side", side_name)->check(CLI::IsMember({"oplax", "lax"}));
    aw_cmd->add_flag("--check", check, "also verify coassociativity and counits");

    auto* gphi_cmd = app.add_subcommand("gphi", "interval composite of the diagonal");
    gphi_cmd->add_option("n", arg_n)->required();
    gphi_cmd->add_option("phi", phi_text, "comma-separated values, e.g. 0,0,1")->required();
    gphi_cmd->add_option("--side", side_name)->check(CLI::IsMember({"oplax", "lax"}));

    auto* retraction_cmd =
        app.add_subcommand("retraction", "last-vertex retraction data of an oriental");
    retraction_cmd->add_option("m", arg_m)->required();

    auto* cells_cmd = app.add_subcommand("cells", "enumerate cells of a complex");
    cells_cmd->add_option("file", in_a)->required();
    cells_cmd->add_option("--dim", dim)->required();
    cells_cmd->add_option("--coeff-cap", coeff_cap);

    auto* hom_cmd = app.add_subcommand("hom", "enumerate morphisms between complexes");
    hom_cmd->add_option("source", in_a)->required();
    hom_cmd->add_option("target", in_b)->required();
    hom_cmd->add_option("--coeff-cap", coeff_cap);

    auto* nerve_cmd = app.add_subcommand("nerve", "materialize the truncated nerve");
    nerve_cmd->add_option("file", in_a)->required();
    nerve_cmd->add_option("--trunc", trunc)->required();
    nerve_cmd->add_option("--coeff-cap", coeff_cap);

    auto* comma_cmd =
        app.add_subcommand("comma", "comma object of the identity on a simplicial set");
    comma_cmd->add_option("file", in_a)->required();
    comma_cmd->add_option("--cap-h", cap_h);
    comma_cmd->add_option("--cap-v", cap_v);

    auto* slice_cmd = app.add_subcommand("slice", "slice of a simplicial set at a simplex");
    slice_cmd->add_option("file", in_a)->required();
    slice_cmd->add_option("--level", level)->required();
    slice_cmd->add_option("--index", index)->required();
    slice_cmd->add_option("--trunc", trunc);
    slice_cmd->add_option("--mode", mode)->check(CLI::IsMember({"under", "over"}));

    auto* homology_cmd = app.add_subcommand("homology", "integral homology of a simplicial set");
    homology_cmd->add_option("file", in_a)->required();
    homology_cmd->add_option("--up-to", up_to)->required();
    homology_cmd->add_flag("--reduced", reduced);

    auto* sdr_cmd = app.add_subcommand(
        "sdr-demo", "verify the deformation retract on a nerve slice");
    sdr_cmd->add_option("m", arg_m)->required();
    sdr_cmd->add_option("n", arg_n)->required();
    sdr_cmd->add_option("--target", in_a, "target complex file")->required();
    sdr_cmd->add_option("--anchor", anchor_path, "anchor morphism file (default: identity)");
    sdr_cmd->add_option("--coeff-cap", coeff_cap);

    auto* awuniq_cmd = app.add_subcommand("aw-uniq", "bounded uniqueness search");
    awuniq_cmd->add_option("n_max", arg_n)->required();

    auto* acceptance_cmd = app.add_subcommand("acceptance", "run the full acceptance battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (validate_cmd->parsed()) {
            json j = load_json(in_a);
            ValidationReport rep;
            if (as_morphism)
                rep = validate_morphism(morphism_from_json(j));
            else
                rep = validate_complex(*complex_from_json(j));
            emit(verdict(rep.ok(), report_to_json(rep), flags, start), flags);
            return rep.ok() ? kExitOk : kExitCheckFailed;
        }
        if (classify_cmd->parsed()) {
            ComplexPtr K = complex_from_json(load_json(in_a));
            ValidationReport rep = validate_complex(*K);
            if (!rep.ok()) {
                emit(verdict(false, report_to_json(rep), flags, start), flags);
                return kExitCheckFailed;
            }
            BasisClassification c = classify_basis(*K);
            json details;
            details["unital"] = c.unital;
            details["strongly_loop_free"] = c.strongly_loop_free;
            details["steiner_strong"] = c.steiner_strong;
            emit(verdict(true, details, flags, start), flags);
            return kExitOk;
        }
        if (tensor_cmd->parsed()) {
            TensorProduct P = tensor_complex(complex_from_json(load_json(in_a)),
                                             complex_from_json(load_json(in_b)), degree_cap);
            emit(complex_to_json(*P.complex), flags);
            return kExitOk;
        }
        if (join_cmd->parsed()) {
            JoinProduct P = join_complex(complex_from_json(load_json(in_a)),
                                         complex_from_json(load_json(in_b)), degree_cap);
            emit(complex_to_json(*P.complex), flags);
            return kExitOk;
        }
        if (disk_cmd->parsed()) {
            emit(complex_to_json(*disk_complex(arg_i)), flags);
            return kExitOk;
        }
        if (oriental_cmd->parsed()) {
            emit(complex_to_json(*oriental_complex(arg_n)), flags);
            return kExitOk;
        }
        if (aw_cmd->parsed()) {
            Side side = side_name == "lax" ? Side::Lax : Side::Oplax;
            AdcMorphism nabla = aw_diagonal(arg_n, side, 2 * arg_n);
            bool ok = validate_morphism(nabla).ok();
            if (check) {
                ComplexPtr K = oriental_complex(arg_n);
                TensorProduct nn = tensor_complex(K, K, 2 * arg_n);
                TensorProduct nn_n = tensor_complex(nn.complex, K, 3 * arg_n);
                TensorProduct n_nn = tensor_complex(K, nn.complex, 3 * arg_n);
                AdcMorphism left =
                    compose(tensor_morphism(nabla, identity_morphism(K), nn, nn_n), nabla);
                AdcMorphism right =
                    compose(tensor_morphism(identity_morphism(K), nabla, nn, n_nn), nabla);
                ok = ok && compose(tensor_associator(nn, nn_n, nn, n_nn), left) == right;
            }
            if (!ok) {
                emit(verdict(false, json::object(), flags, start), flags);
                return kExitCheckFailed;
            }
            emit(morphism_to_json(nabla), flags);
            return kExitOk;
        }
        if (gphi_cmd->parsed()) {
            Side side = side_name == "lax" ? Side::Lax : Side::Oplax;
            AdcMorphism g = g_phi(parse_phi(phi_text, arg_n), side, 2 * arg_n);
            emit(morphism_to_json(g), flags);
            return kExitOk;
        }
        if (retraction_cmd->parsed()) {
            RetractStructure s = vertex_retraction(arg_m);
            ValidationReport rep = validate_retract_structure(s);
            std::string prefix = flags.output.empty()
                                     ? "retraction" + std::to_string(arg_m)
                                     : flags.output;
            save_json(morphism_to_json(s.retraction), prefix + ".r.json", flags.pretty);
            save_json(antihomotopy_to_json(s.homotopy), prefix + ".h.json", flags.pretty);
            json details = report_to_json(rep);
            details["files"] = {prefix + ".r.json", prefix + ".h.json"};
            std::cout << dump_stable(verdict(rep.ok(), details, flags, start), flags.pretty);
            return rep.ok() ? kExitOk : kExitCheckFailed;
        }
        if (cells_cmd->parsed()) {
            ComplexPtr K = complex_from_json(load_json(in_a));
            EnumerationBudget budget;
            budget.coeff_cap = coeff_cap;
            std::vector<CellTable> cells = enumerate_cells(*K, dim, budget, flags.jobs);
            json out;
            out["dimension"] = dim;
            out["count"] = cells.size();
            out["budget"] = {{"coeff_cap", budget.coeff_cap}, {"complete", budget.complete}};
            json list = json::array();
            for (const CellTable& t : cells)
                list.push_back(cell_to_json(t));
            out["cells"] = list;
            emit(out, flags);
            return kExitOk;
        }
        if (hom_cmd->parsed()) {
            ComplexPtr K = complex_from_json(load_json(in_a));
            ComplexPtr L = complex_from_json(load_json(in_b));
            EnumerationBudget budget;
            budget.coeff_cap = coeff_cap;
            std::vector<AdcMorphism> homs = enumerate_morphisms(K, L, budget, {}, flags.jobs);
            json out;
            out["count"] = homs.size();
            out["budget"] = {{"coeff_cap", budget.coeff_cap}, {"complete", budget.complete}};
            json list = json::array();
            for (const AdcMorphism& f : homs) {
                json action = json::object();
                for (const auto& [id, val] : f.action) {
                    json terms = json::array();
                    for (const auto& [tid, c] : val.terms())
                        terms.push_back(json::array({c, tid}));
                    action[id] = terms;
                }
                list.push_back(action);
            }
            out["morphisms"] = list;
            emit(out, flags);
            return kExitOk;
        }
        if (nerve_cmd->parsed()) {
            ComplexPtr K = complex_from_json(load_json(in_a));
            EnumerationBudget budget;
            budget.coeff_cap = coeff_cap;
            Nerve N = nerve(K, trunc, budget, flags.jobs);
            json out = sset_to_json(N.sset);
            out["budget"] = {{"coeff_cap", N.budget.coeff_cap},
                             {"complete", N.budget.complete}};
            emit(out, flags);
            return kExitOk;
        }
        if (comma_cmd->parsed()) {
            TruncatedSimplicialSet X = sset_from_json(load_json(in_a));
            SimplicialMap id = identity_map(X);
            Comma C = comma_bisimplicial(id, id, cap_h, cap_v);
            ValidationReport rep = validate_bisimplicial(C.bis);
            json out = bisimplicial_to_json(C.bis);
            out["ok"] = rep.ok();
            emit(out, flags);
            return rep.ok() ? kExitOk : kExitCheckFailed;
        }
        if (slice_cmd->parsed()) {
            TruncatedSimplicialSet X = sset_from_json(load_json(in_a));
            SimplicialMap id = identity_map(X);
            Slice S = mode == "under" ? slice_under(id, level, index, trunc)
                                      : slice_over(id, level, index, trunc);
            ValidationReport rep = validate_simplicial(S.sset);
            json out = sset_to_json(S.sset);
            out["ok"] = rep.ok();
            emit(out, flags);
            return rep.ok() ? kExitOk : kExitCheckFailed;
        }
        if (homology_cmd->parsed()) {
            TruncatedSimplicialSet X = sset_from_json(load_json(in_a));
            emit(homology_to_json(homology(X, up_to, reduced)), flags);
            return kExitOk;
        }
        if (sdr_cmd->parsed()) {
            ComplexPtr M = complex_from_json(load_json(in_a));
            AdcMorphism anchor;
            if (anchor_path.empty()) {
                if (!same_presentation(*M, *oriental_complex(arg_m)))
                    throw InputError(
                        "--anchor is required unless the target is the m-oriental");
                anchor = identity_morphism(M);
            } else {
                anchor = morphism_from_json(load_json(anchor_path));
                anchor.target = M;
                if (!validate_morphism(anchor).ok())
                    throw InputError("anchor does not define a morphism into the target");
            }
            SdrReport rep = slice_sdr_suite(arg_m, arg_n, M, anchor, coeff_cap, flags.jobs);
            json details;
            details["r_section"] = rep.r_section;
            details["homotopy"] = rep.homotopy;
            details["strong"] = rep.strong;
            details["over_base"] = rep.over_base;
            details["counts"] = rep.slice_counts;
            details["vertex_counts"] = rep.vertex_slice_counts;
            details["budget_complete"] = rep.budget_complete;
            if (!rep.failure.empty())
                details["failure"] = rep.failure;
            emit(verdict(rep.all_ok(), details, flags, start), flags);
            return rep.all_ok() ? kExitOk : kExitCheckFailed;
        }
        if (awuniq_cmd->parsed()) {
            UniquenessReport rep = aw_uniqueness_oracle(arg_n);
            json cases = json::array();
            for (const auto& c : rep.cases) {
                json entry;
                entry["n"] = c.n;
                entry["phi"] = c.phi;
                entry["local_candidates"] = c.local_candidates;
                entry["pinned_by_endpoints"] = c.pinned_by_endpoints;
                cases.push_back(entry);
            }
            json details;
            details["cases"] = cases;
            details["surviving_families"] = rep.surviving_families;
            details["unique_and_matches"] = rep.unique_and_matches;
            details["alternative_rejected"] = rep.alternative_rejected;
            bool ok = rep.unique_and_matches;
            emit(verdict(ok, details, flags, start), flags);
            return ok ? kExitOk : kExitCheckFailed;
        }
        if (acceptance_cmd->parsed()) {
            AcceptanceOptions options;
            options.jobs = flags.jobs;
            bool ok = run_acceptance(std::cout, options);
            return ok ? kExitOk : kExitCheckFailed;
        }
    } catch (const InputError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInputError;
}
