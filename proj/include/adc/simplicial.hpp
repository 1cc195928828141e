#pragma once

#include "adc/orientals.hpp"

namespace adc {

// Finitely truncated simplicial set.  Any operator leaving the truncation
// range is an error, never silent.
struct TruncatedSimplicialSet {
    int cap = 0;
    std::vector<std::vector<std::string>> labels;  // per level 0..cap
    // face[n][i] : level n -> n-1 (1 <= n <= cap, 0 <= i <= n)
    std::vector<std::vector<std::vector<int>>> face;
    // degen[n][i] : level n -> n+1 (0 <= n < cap, 0 <= i <= n)
    std::vector<std::vector<std::vector<int>>> degen;

    std::size_t size(int level) const { return labels.at(level).size(); }
    int d(int level, int i, int idx) const { return face.at(level).at(i).at(idx); }
    int s(int level, int i, int idx) const { return degen.at(level).at(i).at(idx); }

    // X(f) : X_{f.n} -> X_{f.m} for a monotone f via epi-mono factorization.
    int apply(const SimplexMap& f, int idx) const;

    bool is_degenerate(int level, int idx) const;
};

// Checks every composable simplicial identity inside the truncation.
ValidationReport validate_simplicial(const TruncatedSimplicialSet& X);

struct SimplicialMap {
    const TruncatedSimplicialSet* source = nullptr;
    const TruncatedSimplicialSet* target = nullptr;
    std::vector<std::vector<int>> level_map;  // up to min(src.cap, dst.cap)

    int cap() const { return static_cast<int>(level_map.size()) - 1; }
    int apply(int level, int idx) const { return level_map.at(level).at(idx); }
};

ValidationReport validate_simplicial_map(const SimplicialMap& f);

SimplicialMap identity_map(const TruncatedSimplicialSet& X);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// Standard m-simplex: n-simplices are monotone [n] -> [m].
TruncatedSimplicialSet std_simplex(int m, int cap);
// Index of a monotone map among the n-simplices of std_simplex(m, cap).
int std_simplex_index(int m, const SimplexMap& f);
SimplexMap std_simplex_map_at(int m, int level, int idx);

// Opposite simplicial set: operators precomposed through the interval
// reversal.
TruncatedSimplicialSet op_dual(const TruncatedSimplicialSet& X);

struct Product {
    TruncatedSimplicialSet sset;
    std::vector<std::vector<std::pair<int, int>>> pairs;  // per level: (a, b) indices
    int index_of(int level, int a, int b) const;
};

Product product(const TruncatedSimplicialSet& A, const TruncatedSimplicialSet& B);
Product product_with_interval(const TruncatedSimplicialSet& X);  // Δ1 x X

Product pullback(const SimplicialMap& f, const SimplicialMap& g);

// Bisimplicial set with independent horizontal/vertical caps.
struct BisimplicialSet {
    int cap_h = 0;
    int cap_v = 0;
    std::vector<std::vector<std::vector<std::string>>> labels;  // [m][n]
    // operators: face_h[m][n][i] : (m,n) -> (m-1,n), etc.
    std::vector<std::vector<std::vector<std::vector<int>>>> face_h, face_v, degen_h, degen_v;
};

ValidationReport validate_bisimplicial(const BisimplicialSet& B);

TruncatedSimplicialSet diagonal(const BisimplicialSet& B);

// Comma object of two maps g : X -> Z, h : Y -> Z; (m,n)-simplices are
// triples (x, y, z) with z in Z_{m+1+n} restricting to g(x) and h(y).
struct Comma {
    BisimplicialSet bis;
    // triple (x, y, z) indices per (m, n) cell, parallel to labels.
    std::vector<std::vector<std::vector<std::array<int, 3>>>> triples;
};

Comma comma_bisimplicial(const SimplicialMap& g, const SimplicialMap& h, int cap_h, int cap_v);

// Slice of X under the m-simplex z of Z along g : X -> Z; n-simplices are
// pairs (x, z') with z' restricting to z on the front face and to g(x) on
// the back face.
struct Slice {
    TruncatedSimplicialSet sset;
    std::vector<std::vector<std::pair<int, int>>> pairs;  // (x, z') indices
    SimplicialMap to_X;                                   // forgetful map
    int index_of(int level, int x, int zp) const;
};

Slice slice_under(const SimplicialMap& g, int m, int z_index, int cap);
// Image of a slice simplex under f : X -> Y over Z.
SimplicialMap slice_map(const Slice& src, const Slice& dst, const SimplicialMap& f);

Slice slice_over(const SimplicialMap& g, int n, int z_index, int cap);

// Homotopy h : Δ1 x X -> Y checked against its declared endpoints
// (from at vertex 0, to at vertex 1).
ValidationReport validate_homotopy(const Product& interval_x, const SimplicialMap& h,
                                   const SimplicialMap& from, const SimplicialMap& to);

struct HomologyGroup {
    int degree = 0;
    Int free_rank = 0;
    std::vector<Int> torsion;
    bool operator==(const HomologyGroup&) const = default;
};

// Integral homology of the normalized chain complex, reduced variant
// augments over Z.  Valid degrees are 0 .. cap-1.
std::vector<HomologyGroup> homology(const TruncatedSimplicialSet& X, int up_to,
                                    bool reduced = false);

// Smith normal form diagonal (non-zero invariant factors) of an integer
// matrix; exact arithmetic with overflow detection.
std::vector<Int> smith_invariants(std::vector<std::vector<Int>> mat);

}  // namespace adc
