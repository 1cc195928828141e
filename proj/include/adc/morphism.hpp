#pragma once

#include <map>

#include "adc/complex.hpp"

namespace adc {

// Morphism of augmented directed complexes, recorded by its values on the
// source basis.  Values must be positive elements of the target.
struct AdcMorphism {
    ComplexPtr source;
    ComplexPtr target;
    std::map<Id, ChainElement> action;

    ChainElement apply(const Id& id) const;
    ChainElement apply(const ChainElement& x) const;

    bool operator==(const AdcMorphism& other) const { return action == other.action; }
    std::string to_string() const;
};

AdcMorphism identity_morphism(ComplexPtr K);

// g after f; requires f.target and g.source to agree structurally.
AdcMorphism compose(const AdcMorphism& g, const AdcMorphism& f);

// d-commutation, e-preservation and positivity of basis images.
ValidationReport validate_morphism(const AdcMorphism& f);

struct RigidOrderedReport {
    bool rigid_ordered = false;
    std::string counterexample;  // empty when rigid_ordered
};

// Injective basis-to-basis map reflecting and preserving the <=_N preorder.
RigidOrderedReport is_rigid_ordered_inclusion(const AdcMorphism& f);

bool is_isomorphism(const AdcMorphism& f);

// Inverse of a basis-bijective morphism.
AdcMorphism inverse_of_iso(const AdcMorphism& f);

}  // namespace adc
