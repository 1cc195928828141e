#include "adc/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>

#include "adc/slice_transfer.hpp"

namespace adc {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    std::ostream& out;
    int total = 0;
    int passed = 0;

    void run(const std::string& name, const std::function<bool()>& body) {
        ++total;
        auto start = Clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = body();
        } catch (const std::exception& ex) {
            error = ex.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        out << (ok ? "PASS" : "FAIL") << "  [" << total << "/11] " << name << "  ("
            << ms.count() << " ms)";
        if (!ok && !error.empty())
            out << "  error: " << error;
        out << "\n" << std::flush;
        if (ok)
            ++passed;
    }
};

// 1. Steiner validation of the oriental family.
bool steiner_validation() {
    for (int n = 0; n <= 6; ++n) {
        ComplexPtr K = oriental_complex(n);
        if (!validate_complex(*K).ok())
            return false;
        BasisClassification c = classify_basis(*K);
        if (!c.unital || !c.strongly_loop_free || !c.steiner_strong)
            return false;
    }
    return true;
}

// 2. Monoidal closure with exact basis counts for i + j <= 5.
bool monoidal_closure() {
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) {
            ComplexPtr Ki = oriental_complex(i);
            ComplexPtr Kj = oriental_complex(j);
            std::size_t bi = Ki->basis_size(), bj = Kj->basis_size();
            TensorProduct T = tensor_complex(Ki, Kj, i + j);
            if (!validate_complex(*T.complex).ok())
                return false;
            if (T.complex->basis_size() != bi * bj)
                return false;
            if (!classify_basis(*T.complex).steiner_strong)
                return false;
            JoinProduct J = join_complex(Ki, Kj, i + 1 + j);
            if (!validate_complex(*J.complex).ok())
                return false;
            if (J.complex->basis_size() != bi + bj + bi * bj)
                return false;
            if (!classify_basis(*J.complex).steiner_strong)
                return false;
        }
    return true;
}

// 3. Vertex retraction identities for m <= 6.
bool retraction_identities() {
    for (int m = 0; m <= 6; ++m) {
        RetractStructure s = vertex_retraction(m);
        if (!s.strong || !s.over_base || !s.square_zero)
            return false;
        if (!validate_retract_structure(s).ok())
            return false;
        // Degreewise d h' - h' d = (-1)^p (m r' - id).
        const AdcComplex& K = *s.inclusion.target;
        AdcMorphism mr = compose(s.inclusion, s.retraction);
        for (const auto& ids : K.basis)
            for (const Id& id : ids) {
                int p = K.degree(id);
                ChainElement lhs = K.d(s.homotopy.apply(id));
                if (p >= 1)
                    lhs -= s.homotopy.apply(K.d(id));
                ChainElement rhs = mr.apply(id) - ChainElement::single(p, id);
                if (p % 2 == 1)
                    rhs *= -1;
                if (lhs != rhs)
                    return false;
            }
    }
    return true;
}

// 4. The diagonal is a natural counital coassociative coproduct; the
// interval composites match their closed tables.
bool aw_coalgebra() {
    for (int n = 0; n <= 5; ++n) {
        ComplexPtr K = oriental_complex(n);
        AdcMorphism nabla = aw_diagonal(n, Side::Oplax, 2 * n);
        if (!validate_morphism(nabla).ok())
            return false;
        TensorProduct nn = tensor_complex(K, K, 2 * n);
        TensorProduct nn_n = tensor_complex(nn.complex, K, 3 * n);
        TensorProduct n_nn = tensor_complex(K, nn.complex, 3 * n);
        AdcMorphism left =
            compose(tensor_morphism(nabla, identity_morphism(K), nn, nn_n), nabla);
        AdcMorphism right =
            compose(tensor_morphism(identity_morphism(K), nabla, nn, n_nn), nabla);
        if (!(compose(tensor_associator(nn, nn_n, nn, n_nn), left) == right))
            return false;

        AdcMorphism counit = cosimplicial_image(SimplexMap::constant(n, 0, 0));
        TensorProduct uK = tensor_complex(oriental_complex(0), K, n);
        TensorProduct Ku = tensor_complex(K, oriental_complex(0), n);
        AdcMorphism l =
            compose(tensor_unit_left_collapse(uK),
                    compose(tensor_morphism(counit, identity_morphism(K), nn, uK), nabla));
        AdcMorphism r =
            compose(tensor_unit_right_collapse(Ku),
                    compose(tensor_morphism(identity_morphism(K), counit, nn, Ku), nabla));
        if (!(l == identity_morphism(K)) || !(r == identity_morphism(K)))
            return false;
    }
    // Naturality for every monotone map between simplices of dimension <= 5.
    std::vector<AdcMorphism> diagonals;
    std::vector<TensorProduct> squares;
    for (int n = 0; n <= 5; ++n) {
        diagonals.push_back(aw_diagonal(n, Side::Oplax, 2 * n));
        squares.push_back(
            tensor_complex(oriental_complex(n), oriental_complex(n), 2 * n));
    }
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (const SimplexMap& psi : all_monotone_maps(a, b)) {
                AdcMorphism cpsi = cosimplicial_image(psi);
                AdcMorphism lhs = compose(diagonals[b], cpsi);
                AdcMorphism rhs =
                    compose(tensor_morphism(cpsi, cpsi, squares[a], squares[b]), diagonals[a]);
                if (!(lhs == rhs))
                    return false;
            }
    // Interval composites against their closed tables for n <= 4 (g_phi
    // itself raises on any disagreement).
    for (int n = 0; n <= 4; ++n)
        for (const SimplexMap& phi : all_monotone_maps(n, 1)) {
            if (!validate_morphism(g_phi(phi, Side::Oplax, 2 * n)).ok())
                return false;
            if (!validate_morphism(g_phi(phi, Side::Lax, 2 * n)).ok())
                return false;
        }
    return true;
}

// 5. The interval section splits the projections on nerves.
bool section_property(int jobs) {
    std::vector<ComplexPtr> targets = {oriental_complex(1), oriental_complex(2)};
    targets.push_back(tensor_complex(disk_complex(1), disk_complex(1)).complex);
    for (ComplexPtr K : targets) {
        SectionCheck check = check_q_section(K, 3, 3, jobs);
        if (!check.ok)
            return false;
    }
    return true;
}

// 6. Bounded uniqueness of the interval section.
bool uniqueness_oracle() {
    UniquenessReport rep = aw_uniqueness_oracle(2);
    if (!rep.unique_and_matches || !rep.alternative_rejected)
        return false;
    // The degree-1 equation has exactly two local candidate solutions.
    for (const auto& c : rep.cases)
        if (c.n == 1 && !c.pinned_by_endpoints && c.local_candidates != 2)
            return false;
    return true;
}

// 7. Enumeration cross-checks at coefficient cap 3.
bool enumeration_crosschecks(int jobs) {
    ComplexPtr K2 = oriental_complex(2);
    EnumerationBudget b;
    if (enumerate_cells(*K2, 0, b, jobs).size() != 3)
        return false;
    std::vector<CellTable> one_cells = enumerate_cells(*K2, 1, b, jobs);
    if (one_cells.size() != 7)
        return false;
    if (enumerate_morphisms(oriental_complex(1), K2, b, {}, jobs).size() != 7)
        return false;
    for (int dim = 0; dim <= 2; ++dim) {
        std::vector<CellTable> cells = enumerate_cells(*K2, dim, b, jobs);
        for (const Id& id : K2->basis[dim]) {
            CellTable a = atom(*K2, id);
            if (std::find(cells.begin(), cells.end(), a) == cells.end())
                return false;
        }
    }
    return true;
}

// 8. The slice-transfer morphisms validate and obey their tables.
bool appendix_morphisms() {
    for (int m = 0; m <= 3; ++m) {
        SliceTriangle tri = vertex_triangle(m);
        SliceCone cone = vertex_cone(m);
        if (!validate_triangle(tri).ok() || !validate_cone(cone).ok())
            return false;
        for (int n = 0; n <= 3; ++n) {
            ComplexPtr T = oriental_complex(n);
            PsiResult p = psi(tri, T);
            if (!validate_morphism(p.psi).ok())
                return false;
            ChiResult c = chi(cone, T);
            if (!validate_morphism(c.chi).ok())
                return false;
            // chi restricts to the front and back triangles.
            JoinProduct KT =
                join_complex(cone.f.source, T, cone.f.source->max_degree + 1 + T->max_degree);
            if (!(chi_endpoint(c, cone.f.source, T, 1, KT) == psi(cone.front(), T).psi))
                return false;
            if (!(chi_endpoint(c, cone.f.source, T, 0, KT) == psi(cone.back(), T).psi))
                return false;
            // chi_phi checks its eleven-case table internally.
            for (const SimplexMap& phi : all_monotone_maps(n, 1)) {
                ChiPhiResult r = chi_phi(cone, phi);
                if (!validate_morphism(r.chi_phi).ok() ||
                    !validate_morphism(r.on_oriental).ok())
                    return false;
            }
        }
    }
    // Composition law on generated instances.
    ComplexPtr K0 = oriental_complex(0);
    auto vertex = [&](int v) { return cosimplicial_image(SimplexMap::constant(0, 2, v)); };
    SliceTriangle t1{identity_morphism(K0), vertex(0), vertex(1), {}};
    t1.k.from = t1.g;
    t1.k.to = t1.g_prime;
    t1.k.action["0"] = ChainElement::single(1, "0.1");
    SliceTriangle t2{identity_morphism(K0), vertex(1), vertex(2), {}};
    t2.k.from = t2.g;
    t2.k.to = t2.g_prime;
    t2.k.action["0"] = ChainElement::single(1, "1.2");
    for (int n = 0; n <= 2; ++n)
        if (!psi_composition_law_holds(t1, t2, oriental_complex(n)))
            return false;
    for (int m = 1; m <= 3; ++m) {
        SliceTriangle a = vertex_triangle(m);
        SliceTriangle b;
        b.f = a.g_prime;
        b.g = a.g_prime;
        b.g_prime = identity_morphism(a.g.source);
        b.k = zero_antihomotopy(b.g, b.f);
        for (int n = 0; n <= 2; ++n)
            if (!psi_composition_law_holds(a, b, oriental_complex(n)))
                return false;
    }
    return true;
}

// 9. The executable strong-deformation-retract witness.
bool sdr_witness(int jobs) {
    struct Case {
        int m;
        ComplexPtr target;
        AdcMorphism anchor;
    };
    std::vector<Case> cases;
    cases.push_back({1, oriental_complex(1), identity_morphism(oriental_complex(1))});
    cases.push_back({2, oriental_complex(2), identity_morphism(oriental_complex(2))});
    cases.push_back(
        {2, oriental_complex(3), cosimplicial_image(SimplexMap(2, 3, {0, 1, 2}))});
    for (const Case& c : cases) {
        SdrReport rep = slice_sdr_suite(c.m, 3, c.target, c.anchor, 3, jobs);
        if (!rep.all_ok())
            return false;
    }
    return true;
}

// 10. Simplicial identities, fiber decomposition and the pullback identity.
bool simplicial_layer() {
    // Identity audits across the constructed battery.
    for (int m = 0; m <= 3; ++m)
        if (!validate_simplicial(std_simplex(m, 4)).ok())
            return false;
    TruncatedSimplicialSet s2 = std_simplex(2, 6);
    if (!validate_simplicial(op_dual(s2)).ok())
        return false;
    SimplicialMap id2 = identity_map(s2);
    Product prod = product_with_interval(s2);
    if (!validate_simplicial(prod.sset).ok())
        return false;
    Comma C = comma_bisimplicial(id2, id2, 2, 2);
    if (!validate_bisimplicial(C.bis).ok())
        return false;
    if (!validate_simplicial(diagonal(C.bis)).ok())
        return false;

    // Fiber decomposition of (Z↓g)_{m,•} is a partition.
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            std::size_t total = 0;
            std::map<std::array<int, 3>, int> seen;
            for (std::size_t z = 0; z < s2.size(m); ++z) {
                Slice S = slice_under(id2, m, static_cast<int>(z), n);
                total += S.pairs[n].size();
                for (const auto& [x, zp] : S.pairs[n])
                    if (++seen[{static_cast<int>(z), x, zp}] > 1)
                        return false;
            }
            // Joint exhaustiveness against the comma construction.
            if (total != C.triples[m][n].size())
                return false;
            std::set<std::pair<int, int>> comma_pairs;
            for (const auto& t : C.triples[m][n])
                comma_pairs.insert({t[1], t[2]});
            std::set<std::pair<int, int>> slice_pairs;
            for (std::size_t z = 0; z < s2.size(m); ++z) {
                Slice S = slice_under(id2, m, static_cast<int>(z), n);
                for (const auto& p : S.pairs[n])
                    slice_pairs.insert(p);
            }
            if (comma_pairs != slice_pairs)
                return false;
        }

    // Pullback identity X/z = (Z/z) x_Z X element-wise on the Δ2 battery.
    for (int m = 0; m <= 2; ++m)
        for (std::size_t z = 0; z < s2.size(m); ++z) {
            Slice S = slice_under(id2, m, static_cast<int>(z), 2);
            if (!validate_simplicial(S.sset).ok())
                return false;
            Product fib = pullback(S.to_X, id2);
            for (int n = 0; n <= 2; ++n)
                if (fib.sset.size(n) != S.sset.size(n))
                    return false;
        }
    for (std::size_t z = 0; z < s2.size(0); ++z)
        if (!validate_simplicial(slice_over(id2, 0, static_cast<int>(z), 2).sset).ok())
            return false;
    return true;
}

// 11. Homology proxy: slices and truncated nerves are acyclic in range.
bool homology_proxy(int jobs) {
    for (int m = 0; m <= 3; ++m) {
        EnumerationBudget b;
        Nerve N = nerve(oriental_complex(m), m + 2, b, jobs);
        std::vector<HomologyGroup> h = homology(N.sset, m + 1, true);
        for (const auto& g : h)
            if (g.free_rank != 0 || !g.torsion.empty())
                return false;
    }
    TruncatedSimplicialSet s2 = std_simplex(2, 5);
    SimplicialMap id2 = identity_map(s2);
    for (int n = 0; n <= 2; ++n)
        for (std::size_t z = 0; z < s2.size(n); ++z) {
            Slice S = slice_over(id2, n, static_cast<int>(z), 2);
            std::vector<HomologyGroup> h = homology(S.sset, 1, true);
            for (const auto& g : h)
                if (g.free_rank != 0 || !g.torsion.empty())
                    return false;
        }
    return true;
}

}  // namespace

bool run_acceptance(std::ostream& out, const AcceptanceOptions& options) {
    Runner r{out};
    r.run("steiner-validation: orientals are Steiner-strong up to n = 6",
          steiner_validation);
    r.run("monoidal-closure: tensor and join bases for i + j <= 5", monoidal_closure);
    r.run("retraction-identities: vertex retraction equations for m <= 6",
          retraction_identities);
    r.run("aw-coalgebra: coassociative, counital, natural diagonal", aw_coalgebra);
    r.run("section-property: projections split on nerves",
          [&] { return section_property(options.jobs); });
    r.run("uniqueness-oracle: bounded search pins the interval section", uniqueness_oracle);
    r.run("enumeration-crosschecks: cells, homs and atoms agree",
          [&] { return enumeration_crosschecks(options.jobs); });
    r.run("appendix-morphisms: transfer maps validate with their tables",
          appendix_morphisms);
    r.run("sdr-witness: retract, section and homotopy on nerve slices",
          [&] { return sdr_witness(options.jobs); });
    r.run("simplicial-layer: identities, fibers and pullbacks", simplicial_layer);
    r.run("homology-proxy: truncated nerves and slices are acyclic",
          [&] { return homology_proxy(options.jobs); });
    out << (r.passed == r.total ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(r.total - r.passed) +
                                      " criterion(s) failed")
        << " (" << r.passed << "/" << r.total << ")\n";
    return r.passed == r.total;
}

}  // namespace adc
