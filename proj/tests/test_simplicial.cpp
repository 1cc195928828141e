#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "helpers.hpp"

using namespace adc;
using namespace adc::testing;

TEST_CASE("standard simplices") {
    TruncatedSimplicialSet s0 = std_simplex(0, 3);
    for (int n = 0; n <= 3; ++n)
        CHECK(s0.size(n) == 1);
    CHECK(validate_simplicial(s0).ok());

    TruncatedSimplicialSet s2 = std_simplex(2, 3);
    CHECK(s2.size(0) == 3);
    CHECK(s2.size(1) == 6);
    CHECK(validate_simplicial(s2).ok());

    TruncatedSimplicialSet s1 = std_simplex(1, 2);
    CHECK(s1.size(0) == 2);
    CHECK(validate_simplicial(s1).ok());
}

TEST_CASE("operator application through monotone maps") {
    TruncatedSimplicialSet s2 = std_simplex(2, 4);
    // Restriction of the top 2-simplex to its first edge.
    int top = std_simplex_index(2, SimplexMap::identity(2));
    SimplexMap edge01(1, 2, {0, 1});
    int idx = s2.apply(edge01, top);
    CHECK(std_simplex_map_at(2, 1, idx).values == std::vector<int>{0, 1});

    // Degenerate restriction.
    SimplexMap collapse(3, 2, {0, 0, 2, 2});
    int didx = s2.apply(collapse, top);
    CHECK(std_simplex_map_at(2, 3, didx).values == std::vector<int>{0, 0, 2, 2});
    CHECK(s2.is_degenerate(3, didx));
}

TEST_CASE("op dual is an involution and reverses the simplex") {
    TruncatedSimplicialSet s2 = std_simplex(2, 3);
    TruncatedSimplicialSet op = op_dual(s2);
    CHECK(validate_simplicial(op).ok());
    TruncatedSimplicialSet opop = op_dual(op);
    CHECK(opop.face == s2.face);
    CHECK(opop.degen == s2.degen);

    // Explicit isomorphism op(Δ2) ≅ Δ2 by value reversal.
    SimplicialMap rev;
    rev.source = &op;
    rev.target = &s2;
    rev.level_map.resize(op.cap + 1);
    for (int n = 0; n <= op.cap; ++n)
        for (std::size_t i = 0; i < op.size(n); ++i) {
            SimplexMap f = std_simplex_map_at(2, n, static_cast<int>(i));
            rev.level_map[n].push_back(std_simplex_index(2, f.dual()));
        }
    CHECK(validate_simplicial_map(rev).ok());
}

TEST_CASE("products and pullbacks") {
    TruncatedSimplicialSet s1 = std_simplex(1, 3);
    TruncatedSimplicialSet s0 = std_simplex(0, 3);
    Product p = product(s1, s0);
    CHECK(validate_simplicial(p.sset).ok());
    for (int n = 0; n <= 3; ++n)
        CHECK(p.sset.size(n) == s1.size(n));

    TruncatedSimplicialSet s2 = std_simplex(2, 3);
    SimplicialMap id2 = identity_map(s2);
    Product pb = pullback(id2, id2);
    CHECK(validate_simplicial(pb.sset).ok());
    for (int n = 0; n <= 3; ++n)
        CHECK(pb.sset.size(n) == s2.size(n));
}

TEST_CASE("comma object of identities over the interval") {
    TruncatedSimplicialSet s1 = std_simplex(1, 4);
    SimplicialMap id1 = identity_map(s1);
    Comma C = comma_bisimplicial(id1, id1, 1, 1);
    CHECK(validate_bisimplicial(C.bis).ok());
    // (0,0)-simplices: triples with z an arbitrary 1-simplex: (00),(01),(11).
    CHECK(C.bis.labels[0][0].size() == 3);

    // Fiber decomposition: (Z↓g)_{m,•} splits along the m-simplices of Z.
    TruncatedSimplicialSet s2 = std_simplex(2, 5);
    SimplicialMap id2 = identity_map(s2);
    Comma D = comma_bisimplicial(id2, id2, 2, 2);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            // Partition by the front restriction of z.
            std::map<int, std::size_t> by_fiber;
            for (const auto& t : D.triples[m][n]) {
                std::vector<int> front(m + 1);
                std::iota(front.begin(), front.end(), 0);
                by_fiber[s2.apply(SimplexMap(m, m + 1 + n, front), t[2])]++;
            }
            std::size_t total = 0;
            for (std::size_t z = 0; z < s2.size(m); ++z) {
                Slice S = slice_under(id2, m, static_cast<int>(z), n);
                total += S.pairs[n].size();
                CHECK(by_fiber[static_cast<int>(z)] == S.pairs[n].size());
            }
            CHECK(total == D.triples[m][n].size());
        }

    // Diagonal of p2*(X) is X: comma against the terminal object's identity
    // is exercised separately; here check the diagonal of the comma equals
    // its own diagonal levels.
    TruncatedSimplicialSet diag = diagonal(D.bis);
    CHECK(validate_simplicial(diag).ok());
}

TEST_CASE("slices of the standard 2-simplex") {
    TruncatedSimplicialSet s2 = std_simplex(2, 6);
    SimplicialMap id2 = identity_map(s2);

    // Under-slice at vertex 0: objects are the 1-simplices starting at 0.
    int v0 = std_simplex_index(2, SimplexMap::constant(0, 2, 0));
    Slice under = slice_under(id2, 0, v0, 2);
    CHECK(under.pairs[0].size() == 3);
    CHECK(validate_simplicial(under.sset).ok());
    CHECK(validate_simplicial_map(under.to_X).ok());

    // Over-slice at vertex 2.
    int v2 = std_simplex_index(2, SimplexMap::constant(0, 2, 2));
    Slice over = slice_over(id2, 0, v2, 2);
    CHECK(over.pairs[0].size() == 3);
    CHECK(validate_simplicial(over.sset).ok());

    // Over = dual of under-slice of the dual.
    TruncatedSimplicialSet s2op = op_dual(s2);
    SimplicialMap idop = identity_map(s2op);
    int v2op = v2;  // same label set
    Slice under_op = slice_under(idop, 0, v2op, 2);
    TruncatedSimplicialSet expect = op_dual(under_op.sset);
    REQUIRE(expect.cap == over.sset.cap);
    for (int n = 0; n <= expect.cap; ++n)
        CHECK(expect.size(n) == over.sset.size(n));
    CHECK(validate_simplicial(expect).ok());

    // Slice of the point at its top simplex.
    TruncatedSimplicialSet pt = std_simplex(0, 5);
    SimplicialMap idpt = identity_map(pt);
    Slice ptslice = slice_under(idpt, 0, 0, 2);
    for (int n = 0; n <= 2; ++n)
        CHECK(ptslice.pairs[n].size() == 1);
}

TEST_CASE("pullback identity for slices") {
    // X/z = (Z/z) x_Z X for X = Z = Δ2 and z the edge (01), up to level 2.
    TruncatedSimplicialSet s2 = std_simplex(2, 6);
    SimplicialMap id2 = identity_map(s2);
    int e01 = std_simplex_index(2, SimplexMap(1, 2, {0, 1}));
    Slice Xz = slice_under(id2, 1, e01, 2);
    Product fib = pullback(Xz.to_X, id2);
    // Both describe the same simplices: (x, z') with z' pinned; compare counts.
    for (int n = 0; n <= 2; ++n)
        CHECK(fib.sset.size(n) == Xz.sset.size(n));
}

TEST_CASE("slice naturality under composition of maps over Z") {
    // Triangle over Δ2: the face maps d2: Δ1 -> Δ2 and a vertex 0 -> Δ1.
    TruncatedSimplicialSet s2 = std_simplex(2, 6);
    TruncatedSimplicialSet s1 = std_simplex(1, 6);
    TruncatedSimplicialSet s0 = std_simplex(0, 6);

    SimplicialMap f01;  // Δ0 -> Δ1, vertex 0
    f01.source = &s0;
    f01.target = &s1;
    f01.level_map.resize(7);
    for (int n = 0; n <= 6; ++n)
        f01.level_map[n].push_back(std_simplex_index(1, SimplexMap::constant(n, 1, 0)));
    REQUIRE(validate_simplicial_map(f01).ok());

    SimplicialMap f12;  // Δ1 -> Δ2 hitting {0,1}
    f12.source = &s1;
    f12.target = &s2;
    f12.level_map.resize(7);
    for (int n = 0; n <= 6; ++n)
        for (std::size_t i = 0; i < s1.size(n); ++i) {
            SimplexMap g = std_simplex_map_at(1, n, static_cast<int>(i));
            f12.level_map[n].push_back(std_simplex_index(2, compose(SimplexMap(1, 2, {0, 1}), g)));
        }
    REQUIRE(validate_simplicial_map(f12).ok());

    SimplicialMap id2 = identity_map(s2);
    int v0 = std_simplex_index(2, SimplexMap::constant(0, 2, 0));
    Slice SX = slice_under(compose(f12, f01), 0, v0, 2);
    Slice SY = slice_under(f12, 0, v0, 2);
    Slice SZ = slice_under(id2, 0, v0, 2);
    SimplicialMap step1 = slice_map(SX, SY, f01);
    SimplicialMap step2 = slice_map(SY, SZ, f12);
    SimplicialMap direct = slice_map(SX, SZ, compose(f12, f01));
    CHECK(validate_simplicial_map(step1).ok());
    CHECK(validate_simplicial_map(step2).ok());
    for (int n = 0; n <= 2; ++n)
        CHECK(compose(step2, step1).level_map[n] == direct.level_map[n]);
}

TEST_CASE("homotopy validation") {
    TruncatedSimplicialSet s2 = std_simplex(2, 3);
    Product ix = product_with_interval(s2);
    SimplicialMap id2 = identity_map(s2);
    // Constant homotopy: project and include.
    SimplicialMap h;
    h.source = &ix.sset;
    h.target = &s2;
    h.level_map.resize(ix.sset.cap + 1);
    for (int n = 0; n <= ix.sset.cap; ++n)
        for (const auto& [a, b] : ix.pairs[n])
            h.level_map[n].push_back(b);
    CHECK(validate_homotopy(ix, h, id2, id2).ok());

    SimplicialMap corrupted = h;
    corrupted.level_map[1][0] = (corrupted.level_map[1][0] + 1) % s2.size(1);
    CHECK_FALSE(validate_homotopy(ix, corrupted, id2, id2).ok());
}

TEST_CASE("smith invariants") {
    CHECK(smith_invariants({{2, 4}, {4, 4}}) == std::vector<Int>{2, 4});
    CHECK(smith_invariants({{1, 0}, {0, 1}}) == std::vector<Int>{1, 1});
    CHECK(smith_invariants({{0, 0}, {0, 0}}).empty());
    CHECK(smith_invariants({{6, 0}, {0, 10}}) == std::vector<Int>{2, 30});
}

TEST_CASE("homology of standard objects") {
    TruncatedSimplicialSet s2 = std_simplex(2, 3);
    auto h = homology(s2, 2);
    CHECK(h[0].free_rank == 1);
    CHECK(h[1].free_rank == 0);
    CHECK(h[2].free_rank == 0);
    auto hr = homology(s2, 2, true);
    CHECK(hr[0].free_rank == 0);
    CHECK(hr[0].torsion.empty());

    // Boundary of Δ2: two levels of the horn complex give H0 = Z, H1 = Z.
    // Build it as the sub-simplicial set of Δ2 generated by the edges.
    TruncatedSimplicialSet full = std_simplex(2, 2);
    TruncatedSimplicialSet boundary = full;
    // Remove the top nondegenerate simplex by filtering level 2.
    std::vector<int> keep;
    std::vector<int> relabel(full.size(2), -1);
    for (std::size_t i = 0; i < full.size(2); ++i)
        if (full.is_degenerate(2, static_cast<int>(i))) {
            relabel[i] = static_cast<int>(keep.size());
            keep.push_back(static_cast<int>(i));
        }
    TruncatedSimplicialSet bd;
    bd.cap = 2;
    bd.labels.resize(3);
    bd.face.resize(3);
    bd.degen.resize(2);
    bd.labels[0] = full.labels[0];
    bd.labels[1] = full.labels[1];
    for (int i : keep)
        bd.labels[2].push_back(full.labels[2][i]);
    bd.face[1] = full.face[1];
    bd.face[2].resize(3);
    for (int i = 0; i <= 2; ++i)
        for (int k : keep)
            bd.face[2][i].push_back(full.face[2][i][k]);
    bd.degen[0] = full.degen[0];
    bd.degen[1].resize(2);
    for (int i = 0; i <= 1; ++i)
        for (std::size_t x = 0; x < full.size(1); ++x)
            bd.degen[1][i].push_back(relabel[full.degen[1][i][x]]);
    REQUIRE(validate_simplicial(bd).ok());
    auto hb = homology(bd, 1, true);
    CHECK(hb[0].free_rank == 0);
    CHECK(hb[1].free_rank == 1);

    CHECK_THROWS_AS(homology(s2, 3), InputError);
}

TEST_CASE("op dual preserves homology") {
    TruncatedSimplicialSet s2 = std_simplex(2, 3);
    TruncatedSimplicialSet op = op_dual(s2);
    auto h1 = homology(s2, 2);
    auto h2 = homology(op, 2);
    CHECK(h1.size() == h2.size());
    for (std::size_t i = 0; i < h1.size(); ++i)
        CHECK(h1[i] == h2[i]);
}
