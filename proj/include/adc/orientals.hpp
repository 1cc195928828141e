#pragma once

#include "adc/monoidal.hpp"

namespace adc {

// Monotone map [m] -> [n].
struct SimplexMap {
    int m = 0;
    int n = 0;
    std::vector<int> values;  // size m+1, weakly increasing in [0..n]

    SimplexMap() = default;
    SimplexMap(int m_, int n_, std::vector<int> vals);

    int operator()(int i) const { return values.at(i); }
    bool is_identity() const;

    static SimplexMap identity(int n);
    static SimplexMap constant(int m, int n, int value);
    // delta_i : [n-1] -> [n], skips i.
    static SimplexMap face(int n, int i);
    // sigma_i : [n+1] -> [n], repeats i.
    static SimplexMap degeneracy(int n, int i);
    // Interval-reversing dual: i -> n - f(m - i).
    SimplexMap dual() const;

    std::string to_string() const;
};

SimplexMap compose(const SimplexMap& g, const SimplexMap& f);

std::vector<SimplexMap> all_monotone_maps(int m, int n);

// Basis ids of orientals are dotted vertex tuples "i0.i1...".
Id tuple_id(const std::vector<int>& t);
std::vector<int> parse_tuple(const Id& id);

// Free complex on strictly increasing tuples in [0..n] with the
// alternating-sum differential.
ComplexPtr oriental_complex(int n);

// Tuple-wise image with the collapse-to-zero convention on repeats.
AdcMorphism cosimplicial_image(const SimplexMap& phi);

// (i0..ip)*(j0..jq) -> (i0..ip, m+1+j0, .., m+1+jq) on the join basis.
AdcMorphism oriental_join_iso(const JoinProduct& join_mn);

enum class Side { Oplax, Lax };

// Front/back tuple-splitting diagonal.  Both interval-collapse composites
// (oplax and lax g_phi) factor through this one coproduct; the side flag is
// accepted for symmetry and does not change the map.
AdcMorphism aw_diagonal(int n, Side side = Side::Oplax,
                        int degree_cap = default_degree_cap());

// Chain maps behind interval-indexed nerve homotopies.  Oplax lands in
// c(Δ1) (x) c(Δn), lax in c(Δn) (x) c(Δ1).  Computed both as a composite
// through the diagonal and by the closed case table; the two must agree.
AdcMorphism g_phi(const SimplexMap& phi, Side side = Side::Oplax,
                  int degree_cap = default_degree_cap());

// (m, r', h'): collapse to the last vertex with h'(t) = (t, m).
RetractStructure vertex_retraction(int m);

// Exhaustive search for interval sections with bounded coefficients.
struct UniquenessCase {
    int n = 0;
    std::vector<int> phi;
    std::size_t local_candidates = 0;  // values satisfying the level-n constraints
    bool pinned_by_endpoints = false;  // constant phi, value forced
};

struct UniquenessReport {
    int n_max = 0;
    Int coeff_bound = 0;
    std::vector<UniquenessCase> cases;
    std::size_t surviving_families = 0;
    bool unique_and_matches = false;   // exactly one family, equal to g_phi
    bool alternative_rejected = false; // (1)(x)(01)+(01)(x)(0) seen and eliminated
};

UniquenessReport aw_uniqueness_oracle(int n_max, Int coeff_bound = 2);

}  // namespace adc
