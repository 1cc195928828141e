#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "helpers.hpp"

using namespace adc;
using namespace adc::testing;

TEST_CASE("tensor of interval disks") {
    ComplexPtr D1 = disk_complex(1);
    TensorProduct P = tensor_complex(D1, D1);
    const AdcComplex& T = *P.complex;
    CHECK(validate_complex(T).ok());
    REQUIRE(T.max_degree == 2);
    CHECK(T.basis[0].size() == 4);
    CHECK(T.basis[1].size() == 4);
    CHECK(T.basis[2].size() == 1);
    CHECK(classify_basis(T).steiner_strong);

    // d(b(x)a) = (t_b - s_b)(x)a - b(x)(t_a - s_a) for 1-generators.
    Id ba = tensor_id("c1", "c1");
    ChainElement want(1);
    want.add_term(tensor_id("t0", "c1"), 1);
    want.add_term(tensor_id("s0", "c1"), -1);
    want.add_term(tensor_id("c1", "t0"), -1);
    want.add_term(tensor_id("c1", "s0"), 1);
    CHECK(T.d(ba) == want);
}

TEST_CASE("tensor unit collapse") {
    ComplexPtr K = oriental_complex(2);
    ComplexPtr unit = disk_complex(0);
    TensorProduct KU = tensor_complex(K, unit);
    AdcMorphism collapse = tensor_unit_right_collapse(KU);
    CHECK(validate_morphism(collapse).ok());
    CHECK(is_isomorphism(collapse));
    TensorProduct UK = tensor_complex(unit, K);
    AdcMorphism collapse2 = tensor_unit_left_collapse(UK);
    CHECK(is_isomorphism(collapse2));
}

TEST_CASE("tensor_morphism is functorial and respects atoms of generators") {
    ComplexPtr K1 = oriental_complex(1);
    TensorProduct P = tensor_complex(K1, K1);
    AdcMorphism idid = tensor_morphism(identity_morphism(K1), identity_morphism(K1), P, P);
    CHECK(idid == identity_morphism(P.complex));

    // When f, g send generators to generators, <x(x)y> maps to <f(x)(x)g(y)>.
    AdcMorphism face = cosimplicial_image(SimplexMap::face(2, 1));  // c(Δ1) -> c(Δ2)
    ComplexPtr K2 = oriental_complex(2);
    TensorProduct Q = tensor_complex(K2, K2);
    AdcMorphism ff = tensor_morphism(face, face, P, Q);
    CHECK(validate_morphism(ff).ok());
    CellTable src = atom(*P.complex, tensor_id("0.1", "0.1"));
    CellTable dst = atom(*Q.complex, tensor_id("0.2", "0.2"));
    for (int k = 0; k <= src.dimension; ++k)
        for (int eps = 0; eps <= 1; ++eps)
            CHECK(ff.apply(src.rows[k][eps]) == dst.rows[k][eps]);
}

TEST_CASE("join of points is the interval") {
    ComplexPtr K0 = oriental_complex(0);
    JoinProduct J = join_complex(K0, K0);
    const AdcComplex& C = *J.complex;
    CHECK(validate_complex(C).ok());
    CHECK(C.basis[0].size() == 2);
    CHECK(C.basis[1].size() == 1);
    Id edge = join_id(Id("0"), Id("0"));
    ChainElement want(0);
    want.add_term(join_id(std::nullopt, Id("0")), 1);
    want.add_term(join_id(Id("0"), std::nullopt), -1);
    CHECK(C.d(edge) == want);
    CHECK(is_isomorphism(oriental_join_iso(J)));
}

TEST_CASE("join unit is the empty complex") {
    ComplexPtr K = oriental_complex(2);
    ComplexPtr empty = Builder("empty", 0).done();
    JoinProduct J = join_complex(K, empty);
    AdcMorphism incl = join_inclusions(J).iota1;
    CHECK(validate_morphism(incl).ok());
    CHECK(is_isomorphism(incl));
}

TEST_CASE("join basis count matches the oriental") {
    ComplexPtr K1 = oriental_complex(1);
    JoinProduct J = join_complex(K1, K1);
    CHECK(J.complex->basis_size() == 15);
    CHECK(oriental_complex(3)->basis_size() == 15);
    AdcMorphism iso = oriental_join_iso(J);
    CHECK(validate_morphism(iso).ok());
    CHECK(is_isomorphism(iso));
    CHECK(validate_morphism(inverse_of_iso(iso)).ok());
}

TEST_CASE("join inclusions are rigid ordered") {
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            JoinProduct J = join_complex(oriental_complex(m), oriental_complex(n));
            JoinInclusions inc = join_inclusions(J);
            CHECK(validate_morphism(inc.iota1).ok());
            CHECK(validate_morphism(inc.iota2).ok());
            CHECK(is_rigid_ordered_inclusion(inc.iota1).rigid_ordered);
            CHECK(is_rigid_ordered_inclusion(inc.iota2).rigid_ordered);
        }
}

TEST_CASE("join_morphism: m*id is a rigid ordered inclusion") {
    ComplexPtr K0 = oriental_complex(0);
    ComplexPtr K2 = oriental_complex(2);
    ComplexPtr Kn = oriental_complex(1);
    JoinProduct src = join_complex(K0, Kn);
    JoinProduct dst = join_complex(K2, Kn);
    AdcMorphism m = cosimplicial_image(SimplexMap::constant(0, 2, 2));
    AdcMorphism mj = join_morphism(m, identity_morphism(Kn), src, dst);
    CHECK(validate_morphism(mj).ok());
    CHECK(is_rigid_ordered_inclusion(mj).rigid_ordered);

    AdcMorphism idid =
        join_morphism(identity_morphism(K0), identity_morphism(Kn), src, src);
    CHECK(idid == identity_morphism(src.complex));
}

TEST_CASE("iterated products associate after canonical renaming") {
    ComplexPtr A = disk_complex(1);
    ComplexPtr B = oriental_complex(1);
    ComplexPtr C = disk_complex(2);

    TensorProduct ab = tensor_complex(A, B);
    TensorProduct ab_c = tensor_complex(ab.complex, C);
    TensorProduct bc = tensor_complex(B, C);
    TensorProduct a_bc = tensor_complex(A, bc.complex);
    AdcMorphism assoc = tensor_associator(ab, ab_c, bc, a_bc);
    CHECK(validate_morphism(assoc).ok());
    CHECK(is_isomorphism(assoc));

    JoinProduct jab = join_complex(A, B);
    JoinProduct jab_c = join_complex(jab.complex, C);
    JoinProduct jbc = join_complex(B, C);
    JoinProduct ja_bc = join_complex(A, jbc.complex);
    AdcMorphism jassoc = join_associator(jab, jab_c, jbc, ja_bc);
    CHECK(validate_morphism(jassoc).ok());
    CHECK(is_isomorphism(jassoc));
}

TEST_CASE("steiner closure for small tensors and joins") {
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            ComplexPtr Ki = oriental_complex(i);
            ComplexPtr Kj = oriental_complex(j);
            TensorProduct T = tensor_complex(Ki, Kj);
            CHECK(validate_complex(*T.complex).ok());
            CHECK(classify_basis(*T.complex).steiner_strong);
            CHECK(T.complex->basis_size() == Ki->basis_size() * Kj->basis_size());
            JoinProduct J = join_complex(Ki, Kj);
            CHECK(validate_complex(*J.complex).ok());
            CHECK(classify_basis(*J.complex).steiner_strong);
            CHECK(J.complex->basis_size() ==
                  Ki->basis_size() + Kj->basis_size() + Ki->basis_size() * Kj->basis_size());
        }
}

TEST_CASE("disk complexes") {
    ComplexPtr D0 = disk_complex(0);
    CHECK(D0->basis_size() == 1);
    CHECK(D0->e(ChainElement::single(0, "c0")) == 1);

    ComplexPtr D1 = disk_complex(1);
    CHECK(D1->d("c1") == elem(0, {{"t0", 1}, {"s0", -1}}));

    CHECK(classify_basis(*disk_complex(2)).steiner_strong);
    CHECK(validate_complex(*disk_complex(4)).ok());
}

TEST_CASE("principal cells") {
    PrincipalCell c00 = principal_cell(0, 0);
    CHECK(c00.cell.dimension == 0);
    CHECK(c00.cell.augmentation_ok);

    PrincipalCell c11 = principal_cell(1, 1);
    CHECK(c11.cell.dimension == 2);
    CHECK(c11.cell.augmentation_ok);
    // Source and target rows trace the square: the source composes the top
    // edge s(b)(x)a with the right edge b(x)t(a), the target the left and
    // bottom edges.
    ChainElement src = c11.cell.rows[1][0];
    ChainElement tgt = c11.cell.rows[1][1];
    ChainElement expected_src(1);
    expected_src.add_term(tensor_id("s0", "c1"), 1);
    expected_src.add_term(tensor_id("c1", "t0"), 1);
    ChainElement expected_tgt(1);
    expected_tgt.add_term(tensor_id("c1", "s0"), 1);
    expected_tgt.add_term(tensor_id("t0", "c1"), 1);
    CHECK(src == expected_src);
    CHECK(tgt == expected_tgt);

    PrincipalCell c21 = principal_cell(2, 1);
    CHECK(c21.cell.dimension == 3);
    CHECK(c21.cell.augmentation_ok);
}

TEST_CASE("pushout along a rigid ordered inclusion") {
    // Pushout of id along id gives M back.
    ComplexPtr K = oriental_complex(1);
    Pushout triv = pushout_along_rigid_inclusion(identity_morphism(K), identity_morphism(K));
    CHECK(same_presentation(*triv.complex, *K));
    CHECK(validate_morphism(triv.leg_from_L).ok());
    CHECK(validate_morphism(triv.leg_from_M).ok());

    // c(Δm) ⊔_{c(Δ0)} (c(Δ0) * c(Δn)) has size |c(Δm)| + |c(Δ0)*c(Δn)| - 1.
    int m = 2, n = 1;
    ComplexPtr Km = oriental_complex(m);
    ComplexPtr K0 = oriental_complex(0);
    ComplexPtr Kn = oriental_complex(n);
    AdcMorphism vm = cosimplicial_image(SimplexMap::constant(0, m, m));
    JoinProduct J0n = join_complex(K0, Kn);
    Pushout P = pushout_along_rigid_inclusion(vm, join_inclusions(J0n).iota1);
    CHECK(validate_complex(*P.complex).ok());
    CHECK(P.complex->basis_size() == Km->basis_size() + J0n.complex->basis_size() - 1);
    CHECK(validate_morphism(P.leg_from_L).ok());
    CHECK(validate_morphism(P.leg_from_M).ok());

    // c(Δm) ⊔_{c(Δm)} (c(Δm) * c(Δn)) collapses onto the join itself.
    JoinProduct Jmn = join_complex(Km, Kn);
    Pushout Q =
        pushout_along_rigid_inclusion(identity_morphism(Km), join_inclusions(Jmn).iota1);
    CHECK(same_presentation(*Q.complex, *Jmn.complex));

    // Non-rigid first leg is rejected.
    ComplexPtr two = Builder("two", 0).gen(0, "x").e("x", 1).gen(0, "y").e("y", 1).done();
    AdcMorphism fold;
    fold.source = two;
    fold.target = K0;
    fold.action["x"] = elem(0, {{"0", 1}});
    fold.action["y"] = elem(0, {{"0", 1}});
    CHECK_THROWS_AS(pushout_along_rigid_inclusion(fold, identity_morphism(two)), InputError);
}
