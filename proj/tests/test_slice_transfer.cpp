#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "adc/slice_transfer.hpp"
#include "helpers.hpp"

using namespace adc;
using namespace adc::testing;

TEST_CASE("vertex triangle and cone validate") {
    for (int m = 0; m <= 3; ++m) {
        CHECK(validate_triangle(vertex_triangle(m)).ok());
        CHECK(validate_cone(vertex_cone(m)).ok());
    }
}

TEST_CASE("psi on the identity triangle is the canonical identification") {
    ComplexPtr K = oriental_complex(2);
    ComplexPtr T = oriental_complex(1);
    SliceTriangle idt;
    idt.f = identity_morphism(K);
    idt.g = identity_morphism(K);
    idt.g_prime = identity_morphism(K);
    idt.k = zero_antihomotopy(idt.g, idt.f);
    PsiResult p = psi(idt, T);
    CHECK(validate_morphism(p.psi).ok());
    CHECK(is_isomorphism(p.psi));
}

TEST_CASE("psi of the vertex triangle matches the displayed table") {
    int m = 2, n = 1;
    SliceTriangle tri = vertex_triangle(m);
    ComplexPtr T = oriental_complex(n);
    PsiResult p = psi(tri, T);
    CHECK(validate_morphism(p.psi).ok());

    // psi((i0) * (j0)) = (m) * (j0) + (i0, m) for i0 < m; in the amalgam the
    // vertex factor is c(Δ0) with its own generator name.
    Id x = join_id(Id("0"), Id("0"));
    ChainElement want(1);
    want.add_term(join_id(Id("0"), Id("0")), 1);
    want.add_term(Id("0.2"), 1);  // the L-part of the amalgam keeps oriental names
    CHECK(p.psi.apply(x) == want);

    // p > 0 and q > 0 maps to zero.
    Id deep = join_id(Id("0.1"), Id("0.1"));
    CHECK(p.psi.apply(deep).is_zero());

    // x * ∅ lands in the anchor leg.
    CHECK(p.psi.apply(join_id(Id("0.1"), std::nullopt)) == ChainElement::single(1, "0.1"));

    // ∅ * y is fixed.
    CHECK(p.psi.apply(join_id(std::nullopt, Id("0.1"))) ==
          ChainElement::single(1, join_id(std::nullopt, Id("0.1"))));
}

TEST_CASE("psi validates for all small vertex triangles") {
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            if (m + 1 + n > 6)
                continue;
            PsiResult p = psi(vertex_triangle(m), oriental_complex(n));
            CHECK_MESSAGE(validate_morphism(p.psi).ok(), "m=", m, " n=", n);
        }
}

TEST_CASE("psi composition law") {
    ComplexPtr T = oriental_complex(1);

    // Vertex-path triangles over c(Δ2) with non-zero antihomotopies.
    ComplexPtr K2 = oriental_complex(2);
    ComplexPtr K0 = oriental_complex(0);
    auto vertex = [&](int v) { return cosimplicial_image(SimplexMap::constant(0, 2, v)); };
    SliceTriangle t1;
    t1.f = identity_morphism(K0);
    t1.g = vertex(0);
    t1.g_prime = vertex(1);
    t1.k.from = t1.g;
    t1.k.to = vertex(1);
    t1.k.action["0"] = elem(1, {{"0.1", 1}});
    REQUIRE(validate_triangle(t1).ok());
    SliceTriangle t2;
    t2.f = identity_morphism(K0);
    t2.g = vertex(1);
    t2.g_prime = vertex(2);
    t2.k.from = t2.g;
    t2.k.to = vertex(2);
    t2.k.action["0"] = elem(1, {{"1.2", 1}});
    REQUIRE(validate_triangle(t2).ok());
    CHECK(psi_composition_law_holds(t1, t2, T));
    CHECK(psi_composition_law_holds(t1, t2, oriental_complex(2)));

    // Vertex retraction triangle followed by the inclusion triangle.
    for (int m = 1; m <= 2; ++m) {
        SliceTriangle a = vertex_triangle(m);
        SliceTriangle b;
        b.f = a.g_prime;  // c(Δ0) -> c(Δm)
        b.g = a.g_prime;
        b.g_prime = identity_morphism(a.g.source);
        b.k = zero_antihomotopy(b.g, b.f);
        REQUIRE(validate_triangle(b).ok());
        CHECK(psi_composition_law_holds(a, b, T));
    }

    // Identity triangles compose trivially.
    SliceTriangle idt;
    idt.f = identity_morphism(K2);
    idt.g = identity_morphism(K2);
    idt.g_prime = identity_morphism(K2);
    idt.k = zero_antihomotopy(idt.g, idt.f);
    CHECK(psi_composition_law_holds(idt, idt, T));
}

TEST_CASE("chi rows restrict to the front and back psi") {
    for (int m = 1; m <= 2; ++m) {
        SliceCone cone = vertex_cone(m);
        ComplexPtr T = oriental_complex(1);
        ComplexPtr K = cone.f.source;
        ChiResult c = chi(cone, T);
        CHECK(validate_morphism(c.chi).ok());

        JoinProduct KT = join_complex(K, T);
        AdcMorphism front = chi_endpoint(c, K, T, 1, KT);
        AdcMorphism back = chi_endpoint(c, K, T, 0, KT);
        PsiResult pf = psi(cone.front(), T);
        PsiResult pb = psi(cone.back(), T);
        CHECK(front == pf.psi);
        CHECK(back == pb.psi);
    }
}

TEST_CASE("degenerate cone collapses the interval row") {
    // l = 0, H = 0, f = f', k = k': the (01) row vanishes and the endpoint
    // rows agree.
    ComplexPtr K = oriental_complex(1);
    SliceCone cone;
    cone.f = identity_morphism(K);
    cone.f_prime = identity_morphism(K);
    cone.g = identity_morphism(K);
    cone.g_prime = identity_morphism(K);
    cone.k = zero_antihomotopy(cone.g, cone.f);
    cone.k_prime = cone.k;
    cone.l = zero_antihomotopy(cone.f, cone.f_prime);
    cone.H = zero_two_antihomotopy(add(cone.k, postcompose(cone.g_prime, cone.l)), cone.k_prime);
    REQUIRE(validate_cone(cone).ok());
    ComplexPtr T = oriental_complex(1);
    ChiResult c = chi(cone, T);
    CHECK(validate_morphism(c.chi).ok());
    for (const auto& [id, xy] : c.domain.factors) {
        const auto& [x, w] = xy;
        if (!w || !x)
            continue;
        const auto& [eps, y] = c.interval_T.factors.at(*w);
        if (eps == "0.1")
            CHECK(c.chi.apply(id).is_zero());
    }
    JoinProduct KT = join_complex(K, T);
    CHECK(chi_endpoint(c, K, T, 0, KT) == chi_endpoint(c, K, T, 1, KT));
}

TEST_CASE("chi_phi closed table") {
    SliceCone cone = vertex_cone(2);
    // Constant 1 gives the identity.
    ChiPhiResult r0 = chi_phi(cone, SimplexMap::constant(1, 1, 1));
    CHECK(r0.chi_phi == identity_morphism(r0.join_mn.complex));

    // r = 1, p = 0, q > 0 row.
    ChiPhiResult r1 = chi_phi(cone, SimplexMap(1, 1, {0, 1}));
    ChainElement want(2);
    want.add_term(join_id(Id("2"), Id("0.1")), 1);
    want.add_term(join_id(Id("0.2"), Id("1")), 1);
    CHECK(r1.chi_phi.apply(join_id(Id("0"), Id("0.1"))) == want);

    // r >= 2 with p > 0, q > 0 vanishes.
    ChiPhiResult r2 = chi_phi(cone, SimplexMap::constant(1, 1, 0));
    CHECK(r2.chi_phi.apply(join_id(Id("0.1"), Id("0.1"))).is_zero());

    // All phi on m, n <= 2: construction self-checks the table; the
    // conjugated endomorphism validates.
    for (int m = 0; m <= 2; ++m) {
        SliceCone c = vertex_cone(m);
        for (int n = 0; n <= 2; ++n)
            for (const SimplexMap& phi : all_monotone_maps(n, 1)) {
                ChiPhiResult r = chi_phi(c, phi);
                CHECK(validate_morphism(r.chi_phi).ok());
                CHECK(validate_morphism(r.on_oriental).ok());
            }
    }
}

TEST_CASE("q projections and the section property") {
    ComplexPtr K = oriental_complex(2);
    TensorProduct P = tensor_complex(oriental_complex(1), K, 3);
    QProjections q = q_projections(P);
    CHECK(validate_morphism(q.q1).ok());
    CHECK(validate_morphism(q.q2).ok());
    CHECK(q.q1.apply(tensor_id("0.1", "0")) == elem(1, {{"0.1", 1}}));
    CHECK(q.q1.apply(tensor_id("0.1", "0.1")).is_zero());

    // s on (id, id) is the diagonal itself.
    ComplexPtr K2 = oriental_complex(2);
    TensorProduct KK = tensor_complex(K2, K2, 4);
    AdcMorphism s = aw_section(identity_morphism(K2), identity_morphism(K2), KK);
    CHECK(s == aw_diagonal(2));

    SectionCheck check = check_q_section(oriental_complex(1), 3);
    CHECK(check.ok);
    CHECK(check.pairs_checked > 0);
}

TEST_CASE("nerve homotopy of the identity transformation is constant") {
    ComplexPtr K = oriental_complex(1);
    Antihomotopy idh = zero_antihomotopy(identity_morphism(K), identity_morphism(K));
    AdcMorphism alpha = lax_transformation_from_antihomotopy(idh);
    TensorProduct domain = tensor_complex(K, oriental_complex(1), K->max_degree + 1);
    NerveHomotopy NH = nerve_homotopy(domain, alpha, Side::Lax, 2);
    CHECK(NH.report.ok());
    // Constant homotopy: value independent of the interval coordinate.
    for (int n = 0; n <= 2; ++n)
        for (const auto& [phi_idx, x_idx] : NH.interval->pairs[n])
            CHECK(NH.homotopy.apply(n, NH.interval->index_of(n, phi_idx, x_idx)) ==
                  NH.from.apply(n, x_idx));
}

TEST_CASE("nerve homotopy of the vertex retraction") {
    int m = 2;
    RetractStructure r = vertex_retraction(m);
    AdcMorphism alpha = lax_transformation_from_antihomotopy(r.homotopy);
    ComplexPtr Km = r.inclusion.target;
    TensorProduct domain = tensor_complex(Km, oriental_complex(1), m + 1);
    NerveHomotopy NH = nerve_homotopy(domain, alpha, Side::Lax, 2);
    CHECK(NH.report.ok());
    CHECK(NH.endpoint_from == identity_morphism(Km));
    CHECK(NH.endpoint_to == compose(r.inclusion, r.retraction));

    // Corrupting one value breaks the homotopy audit.
    NerveHomotopy broken = NH;
    broken.homotopy.level_map[1][0] =
        (broken.homotopy.level_map[1][0] + 1) %
        static_cast<int>(broken.target_nerve->sset.size(1));
    CHECK_FALSE(
        validate_homotopy(*broken.interval, broken.homotopy, broken.from, broken.to).ok());
}

TEST_CASE("nerve slices enumerate constrained morphisms") {
    ComplexPtr K1 = oriental_complex(1);
    auto S = nerve_slice(1, K1, identity_morphism(K1), 2);
    CHECK(validate_simplicial(S->sset).ok());
    for (int n = 0; n <= 2; ++n)
        CHECK(S->simplices[n].size() > 0);
}

TEST_CASE("sdr suite at the trivial anchor") {
    // m = 0: r and s are mutually inverse and h is constant.
    ComplexPtr K1 = oriental_complex(1);
    AdcMorphism anchor = cosimplicial_image(SimplexMap::constant(0, 1, 1));
    SdrReport rep = slice_sdr_suite(0, 2, K1, anchor);
    CHECK_MESSAGE(rep.all_ok(), rep.failure);
}

TEST_CASE("sdr suite on the interval") {
    ComplexPtr K1 = oriental_complex(1);
    SdrReport rep = slice_sdr_suite(1, 2, K1, identity_morphism(K1));
    CHECK_MESSAGE(rep.all_ok(), rep.failure);
    CHECK(rep.slice_counts.size() == 3);
}
