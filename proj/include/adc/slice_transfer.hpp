#pragma once

#include "adc/enumerate.hpp"

namespace adc {

// Triangle g = g'.f up to an antihomotopy k, with g' a rigid ordered
// inclusion.  Acts on nerve slices by precomposition with psi.
struct SliceTriangle {
    AdcMorphism f;        // K -> K'
    AdcMorphism g;        // K -> L
    AdcMorphism g_prime;  // K' -> L, rigid ordered inclusion
    Antihomotopy k;       // g -> g'.f
};

ValidationReport validate_triangle(const SliceTriangle& t);

// Two triangles sharing g, g' with an antihomotopy l : f -> f' and a
// 2-antihomotopy H : g'.l + k -> k'.
struct SliceCone {
    AdcMorphism f;        // K -> K'
    AdcMorphism f_prime;  // K -> K'
    AdcMorphism g;        // K -> L
    AdcMorphism g_prime;  // K' -> L, rigid ordered inclusion
    Antihomotopy k;        // g -> g'.f      (front)
    Antihomotopy k_prime;  // g -> g'.f'     (back)
    Antihomotopy l;        // f -> f'
    TwoAntihomotopy H;     // g'.l + k -> k'

    SliceTriangle front() const { return {f, g, g_prime, k}; }
    SliceTriangle back() const { return {f_prime, g, g_prime, k_prime}; }
};

ValidationReport validate_cone(const SliceCone& c);

// psi : K * T -> L ⊔_{K'} (K' * T),
//   x * ∅ -> g(x),   ∅ * y -> ∅ * y,   x * y -> f(x) * y + e(y) k(x).
struct PsiResult {
    JoinProduct domain;     // K * T
    JoinProduct prime_T;    // K' * T
    Pushout target;         // L ⊔_{K'} (K' * T)
    AdcMorphism psi;
};

PsiResult psi(const SliceTriangle& t, ComplexPtr T);

// Composite of stacked triangles: (f'f, k'.f + k) over the same base.
SliceTriangle compose_triangles(const SliceTriangle& t1, const SliceTriangle& t2);

// Chain-level functoriality: extending psi(t2) over the amalgam and
// composing with psi(t1) equals psi of the composite triangle.
bool psi_composition_law_holds(const SliceTriangle& t1, const SliceTriangle& t2, ComplexPtr T);

// chi : K * (c(Δ1) (x) T) -> L ⊔_{K'} (K' * T) with rows selected by the
// interval factor: (0) uses the back triangle, (1) the front, (01) the
// antihomotopy data.
struct ChiResult {
    TensorProduct interval_T;  // c(Δ1) (x) T
    JoinProduct domain;        // K * (c(Δ1) (x) T)
    JoinProduct prime_T;       // K' * T
    Pushout target;
    AdcMorphism chi;
};

ChiResult chi(const SliceCone& c, ComplexPtr T);

// Restriction of chi along K * ((eps) (x) -).
AdcMorphism chi_endpoint(const ChiResult& result, ComplexPtr K, ComplexPtr T, int eps,
                         const JoinProduct& K_T);

// The cone with f = id, f' = m.r', l = k' = h', k = 0, H = 0 over c(Δm).
SliceCone vertex_cone(int m);
SliceTriangle vertex_triangle(int m);  // its back triangle (r', h')

// chi of the vertex cone composed with K * g_phi, collapsed onto
// c(Δm) * c(Δn); checked against the closed eleven-case table and, through
// the join identification, against an endomorphism of c(Δ{m+1+n}).
struct ChiPhiResult {
    JoinProduct join_mn;       // c(Δm) * c(Δn)
    AdcMorphism chi_phi;       // endomorphism of the join
    AdcMorphism on_oriental;   // conjugate endomorphism of c(Δ{m+1+n})
};

ChiPhiResult chi_phi(const SliceCone& cone, const SimplexMap& phi);

// q1(x (x) y) = e(y) x when y has degree 0, else 0; q2 symmetrically.
struct QProjections {
    AdcMorphism q1;
    AdcMorphism q2;
};

QProjections q_projections(const TensorProduct& P);

// s(x, y) = (x (x) y) . nabla : c(Δn) -> K (x) L for n-simplices x, y.
AdcMorphism aw_section(const AdcMorphism& x, const AdcMorphism& y, const TensorProduct& KL);

// Level-wise check that N(q).s is the identity on Δ1 x nerve(K), through
// truncation `trunc`: q1.(c(phi) (x) x).nabla = c(phi) and q2... = x.
struct SectionCheck {
    bool ok = true;
    std::size_t pairs_checked = 0;
    EnumerationBudget budget;
};

SectionCheck check_q_section(ComplexPtr K, int trunc, Int coeff_cap = 3, int jobs = 1);

// Simplicial homotopy induced on nerves by an interval-indexed morphism.
// Oplax expects alpha : c(Δ1) (x) K -> L, lax alpha : K (x) c(Δ1) -> L.
struct NerveHomotopy {
    std::shared_ptr<Nerve> source_nerve;
    std::shared_ptr<Nerve> target_nerve;
    std::shared_ptr<Product> interval;
    SimplicialMap homotopy;
    SimplicialMap from;
    SimplicialMap to;
    AdcMorphism endpoint_from;  // chain-level endpoints of alpha
    AdcMorphism endpoint_to;
    ValidationReport report;
};

// `domain` carries the factor structure of alpha's source: c(Δ1) (x) K for
// the oplax side, K (x) c(Δ1) for the lax side.
NerveHomotopy nerve_homotopy(const TensorProduct& domain, const AdcMorphism& alpha, Side side,
                             int trunc, Int coeff_cap = 3, int jobs = 1);

// Interval-indexed morphism K (x) c(Δ1) -> L packaging an antihomotopy.
AdcMorphism lax_transformation_from_antihomotopy(const Antihomotopy& h);

// Nerve slice below an anchor c : c(Δm) -> M, materialized as constrained
// morphisms on c(Δ{m+1+n}).
struct NerveSlice {
    int m = 0;
    int trunc = 0;
    ComplexPtr target;
    AdcMorphism anchor;
    EnumerationBudget budget;
    std::vector<std::vector<AdcMorphism>> simplices;
    std::vector<std::vector<std::string>> keys;  // serialized, sorted per level
    TruncatedSimplicialSet sset;

    int index_of(int level, const AdcMorphism& f) const;
};

std::shared_ptr<NerveSlice> nerve_slice(int m, ComplexPtr M, const AdcMorphism& anchor,
                                        int trunc, Int coeff_cap = 3, int jobs = 1);

struct SdrReport {
    bool r_well_defined = false;
    bool s_well_defined = false;
    bool r_section = false;    // r.s = id
    bool homotopy = false;     // simplicial map with endpoints s.r and id
    bool strong = false;       // h(phi, s(v)) = s(v)
    bool over_base = false;    // U.h = U.pr2 for the forgetful U
    std::vector<std::size_t> slice_counts;
    std::vector<std::size_t> vertex_slice_counts;
    bool budget_complete = true;
    std::string failure;  // first failing identity with its witness

    bool all_ok() const {
        return r_well_defined && s_well_defined && r_section && homotopy && strong && over_base;
    }
};

// Executable strong-deformation-retract witness on the slice of the nerve of
// M below the anchor: retraction to the vertex slice, its section, and the
// homotopy, all acting by precomposition with the transfer morphisms.
SdrReport slice_sdr_suite(int m, int n_trunc, ComplexPtr M, const AdcMorphism& anchor,
                          Int coeff_cap = 3, int jobs = 1);

}  // namespace adc
