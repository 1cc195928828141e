#pragma once

#include <optional>

#include "adc/homotopy.hpp"

namespace adc {

// Total-degree cap for product constructions; basis sizes grow
// multiplicatively.  Overridable through the ADC_MAX_TOTAL_DEGREE
// environment variable (see default_degree_cap).
int default_degree_cap();

inline const Id kEmptyToken = "∅";

Id tensor_id(const Id& left, const Id& right);
Id join_id(const std::optional<Id>& left, const std::optional<Id>& right);

// Tensor product of based complexes; keeps the basis pairing around for
// bilinear extensions.
struct TensorProduct {
    ComplexPtr complex;
    ComplexPtr left;
    ComplexPtr right;
    std::map<Id, std::pair<Id, Id>> factors;

    // x (x) y, bilinearly extended.
    ChainElement pair(const ChainElement& x, const ChainElement& y) const;
};

TensorProduct tensor_complex(ComplexPtr K, ComplexPtr L, int degree_cap = default_degree_cap());

// (f (x) g)(x (x) y) = f(x) (x) g(y); revalidated by the caller's tests.
AdcMorphism tensor_morphism(const AdcMorphism& f, const AdcMorphism& g,
                            const TensorProduct& src, const TensorProduct& dst);

// Convenience overload building both product complexes.
AdcMorphism tensor_morphism(const AdcMorphism& f, const AdcMorphism& g);

// Unit collapses λ(D0) (x) K ≅ K ≅ K (x) λ(D0).
AdcMorphism tensor_unit_left_collapse(const TensorProduct& unit_K);
AdcMorphism tensor_unit_right_collapse(const TensorProduct& K_unit);

// ((a|b)|c) -> (a|(b|c)) canonical reassociation.
AdcMorphism tensor_associator(const TensorProduct& ab, const TensorProduct& ab_c,
                              const TensorProduct& bc, const TensorProduct& a_bc);

// Join of based complexes.  Basis ids are x*∅, ∅*y and x*y; the unit token
// has degree -1 and never appears alone.
struct JoinProduct {
    ComplexPtr complex;
    ComplexPtr left;
    ComplexPtr right;
    std::map<Id, std::pair<std::optional<Id>, std::optional<Id>>> factors;

    Id id_of(const std::optional<Id>& l, const std::optional<Id>& r) const;
    // x * y for x in K + Z∅, y in L + Z∅, bilinear; pass std::nullopt for ∅.
    ChainElement pair(const std::optional<ChainElement>& x,
                      const std::optional<ChainElement>& y) const;
};

JoinProduct join_complex(ComplexPtr K, ComplexPtr L, int degree_cap = default_degree_cap());

struct JoinInclusions {
    AdcMorphism iota1;  // K -> K*L, x -> x*∅
    AdcMorphism iota2;  // L -> K*L, y -> ∅*y
};

JoinInclusions join_inclusions(const JoinProduct& p);

AdcMorphism join_morphism(const AdcMorphism& f, const AdcMorphism& g, const JoinProduct& src,
                          const JoinProduct& dst);

AdcMorphism join_associator(const JoinProduct& ab, const JoinProduct& ab_c,
                            const JoinProduct& bc, const JoinProduct& a_bc);

// λ(D_i): two generators s{k}, t{k} per degree k < i and one top cell c{i}.
ComplexPtr disk_complex(int i);

// Atom of the top tensor generator c_i (x) c_j in λ(D_i) (x) λ(D_j).
struct PrincipalCell {
    TensorProduct product;
    CellTable cell;
};
PrincipalCell principal_cell(int i, int j, int degree_cap = default_degree_cap());

// Pushout of u : K' -> M along a rigid ordered inclusion g' : K' -> L.
// The basis is (basis(L) minus g'(basis(K'))) ⊎ basis(M); differentials of
// retained L-elements are rewritten through u.
struct Pushout {
    ComplexPtr complex;
    AdcMorphism leg_from_L;  // L -> P
    AdcMorphism leg_from_M;  // M -> P
    AdcMorphism g_prime;     // K' -> L
    AdcMorphism u;           // K' -> M
};

Pushout pushout_along_rigid_inclusion(const AdcMorphism& g_prime, const AdcMorphism& u);

// Map P -> N determined by maps on the two legs that agree on K'.
AdcMorphism amalgam_extend(const Pushout& p, const AdcMorphism& on_L, const AdcMorphism& on_M);

}  // namespace adc
