#pragma once

#include "adc/morphism.hpp"

namespace adc {

// Degree +1 graded map h with d h - h d = (-1)^i (to - from), positive images.
struct Antihomotopy {
    AdcMorphism from;
    AdcMorphism to;
    std::map<Id, ChainElement> action;  // per source basis id, degree i -> i+1

    ChainElement apply(const Id& id) const;
    ChainElement apply(const ChainElement& x) const;

    bool operator==(const Antihomotopy& other) const {
        return action == other.action && from == other.from && to == other.to;
    }
};

// Degree +2 graded map H with d H - H d = (-1)^i (to - from) between two
// antihomotopies sharing endpoints.
struct TwoAntihomotopy {
    Antihomotopy from;
    Antihomotopy to;
    std::map<Id, ChainElement> action;

    ChainElement apply(const Id& id) const;
    ChainElement apply(const ChainElement& x) const;
};

Antihomotopy zero_antihomotopy(const AdcMorphism& f, const AdcMorphism& g);
TwoAntihomotopy zero_two_antihomotopy(const Antihomotopy& h, const Antihomotopy& k);

ValidationReport validate_antihomotopy(const Antihomotopy& h);
ValidationReport validate_antihomotopy(const TwoAntihomotopy& H);

// h.u for u : J -> K; an antihomotopy (from.u) -> (to.u).
Antihomotopy precompose(const Antihomotopy& h, const AdcMorphism& u);
// v.h for v : L -> M; an antihomotopy (v.from) -> (v.to).
Antihomotopy postcompose(const AdcMorphism& v, const Antihomotopy& h);
// Pointwise sum; endpoints must chain: h : a -> b, k : b -> c gives a -> c.
Antihomotopy add(const Antihomotopy& h, const Antihomotopy& k);

// Retract data for an inclusion i : K -> L.  The homotopy runs from id_L to
// i.r.  Flags request the corresponding equations in validation:
// strong h.i = 0, over_base r.h = 0, square_zero h.h = 0; r.i = id always.
struct RetractStructure {
    AdcMorphism inclusion;
    AdcMorphism retraction;
    Antihomotopy homotopy;
    bool strong = false;
    bool over_base = false;
    bool square_zero = false;
};

ValidationReport validate_retract_structure(const RetractStructure& s);

}  // namespace adc
