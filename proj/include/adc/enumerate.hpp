#pragma once

#include "adc/orientals.hpp"
#include "adc/simplicial.hpp"

namespace adc {

// Search budget for bounded enumeration.  `complete` is an indicator, not a
// proof: it is cleared as soon as any emitted solution touches the cap, since
// a larger cap could then admit more solutions.
struct EnumerationBudget {
    Int coeff_cap = 3;
    bool complete = true;
};

// All positive elements x of degree k with coefficients <= cap satisfying
//   k >= 1: d(x) = w,    k == 0: e(x) = target_e.
// Serial reference implementation; the parallel kernels must match it.
std::vector<ChainElement> solve_boundary_serial(const AdcComplex& K, int k,
                                                const ChainElement& w, Int target_e,
                                                EnumerationBudget& budget);

// Checks the four cell-table conditions over K.
bool is_cell(const AdcComplex& K, const CellTable& t);

// All cells of dimension dim with coefficients <= cap, in the lexicographic
// order of their serialization.
std::vector<CellTable> enumerate_cells(const AdcComplex& K, int dim, EnumerationBudget& budget,
                                       int jobs = 1);
std::vector<CellTable> enumerate_cells_serial(const AdcComplex& K, int dim,
                                              EnumerationBudget& budget);

using MorphismConstraint = std::map<Id, ChainElement>;

// All morphisms K -> L with image coefficients <= cap whose values on the
// pinned sub-basis match the constraint.
std::vector<AdcMorphism> enumerate_morphisms(ComplexPtr K, ComplexPtr L,
                                             EnumerationBudget& budget,
                                             const MorphismConstraint& constraint = {},
                                             int jobs = 1);
std::vector<AdcMorphism> enumerate_morphisms_serial(ComplexPtr K, ComplexPtr L,
                                                    EnumerationBudget& budget,
                                                    const MorphismConstraint& constraint = {});

// Street nerve, truncated: n-simplices are the morphisms c(Δn) -> K, with
// faces and degeneracies acting by precomposition.
struct Nerve {
    ComplexPtr K;
    int trunc = 0;
    EnumerationBudget budget;
    std::vector<std::vector<AdcMorphism>> simplices;
    std::vector<std::vector<std::string>> keys;  // serialized, sorted per level
    TruncatedSimplicialSet sset;

    int index_of(int level, const AdcMorphism& f) const;
};

Nerve nerve(ComplexPtr K, int trunc, EnumerationBudget budget, int jobs = 1);

}  // namespace adc
