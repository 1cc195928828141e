#pragma once

#include <array>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "adc/chain.hpp"

namespace adc {

// Augmented directed complex with a chosen graded basis.  The positivity
// submonoid in each degree is the non-negative span of the basis.
struct AdcComplex {
    std::string name;
    int max_degree = 0;
    std::vector<std::vector<Id>> basis;          // basis[i] = ordered ids of degree i
    std::unordered_map<Id, ChainElement> diff;   // defined for every basis id of degree >= 1
    std::unordered_map<Id, Int> aug;             // defined for every basis id of degree 0

    // Derived index, rebuilt after construction.
    std::unordered_map<Id, int> degree_of;
    std::unordered_map<Id, int> pos_of;

    void rebuild_index();

    bool has(const Id& id) const { return degree_of.count(id) != 0; }
    bool has(const Id& id, int degree) const {
        auto it = degree_of.find(id);
        return it != degree_of.end() && it->second == degree;
    }
    int degree(const Id& id) const;

    std::size_t basis_size() const {
        std::size_t n = 0;
        for (const auto& b : basis)
            n += b.size();
        return n;
    }

    // d on a basis element; zero in degree 0.
    ChainElement d(const Id& id) const;
    // Linear extension; zero on degree 0 or on the zero element.
    ChainElement d(const ChainElement& x) const;
    // Augmentation, linearly extended over degree-0 elements.
    Int e(const ChainElement& x) const;
    Int e(const Id& id) const;
};

using ComplexPtr = std::shared_ptr<const AdcComplex>;

ComplexPtr finalize(AdcComplex k);

// Structural identity: same basis, differential and augmentation
// (names may differ).
bool same_presentation(const AdcComplex& a, const AdcComplex& b);

struct Issue {
    enum class Kind { Input, Algebra };
    Kind kind;
    std::string code;     // stable machine tag, e.g. "d-squared"
    std::string message;  // human-readable, includes the witness
    Id witness;
};

struct ValidationReport {
    std::vector<Issue> issues;
    bool ok() const { return issues.empty(); }
    bool has_input_errors() const {
        for (const auto& i : issues)
            if (i.kind == Issue::Kind::Input)
                return true;
        return false;
    }
    void add(Issue::Kind kind, std::string code, std::string message, Id witness = {}) {
        issues.push_back({kind, std::move(code), std::move(message), std::move(witness)});
    }
    std::string to_string() const;
};

// Checks basis uniqueness, reference well-formedness, d.d = 0 and e.d1 = 0.
ValidationReport validate_complex(const AdcComplex& K);

// Checks that x only references basis ids of its own degree.
ValidationReport validate_element(const AdcComplex& K, const ChainElement& x);

struct PositiveParts {
    std::set<Id> support;
    ChainElement plus;
    ChainElement minus;
};

// Unique decomposition x = plus - minus with disjoint positive supports.
PositiveParts positive_parts(const AdcComplex& K, const ChainElement& x);

// The least preorder on the whole basis generated, for every x of degree >= 1,
// by y <= x for y in supp d(x)_- and x <= z for z in supp d(x)_+.
struct Preorder {
    std::vector<Id> elements;
    std::unordered_map<Id, std::size_t> index;
    std::vector<std::vector<char>> reach;  // reflexive-transitive closure
    std::vector<std::pair<Id, Id>> generating_edges;
    bool antisymmetric = true;
    std::optional<std::pair<Id, Id>> loop_witness;

    bool leq(const Id& a, const Id& b) const {
        return reach[index.at(a)][index.at(b)] != 0;
    }
};

Preorder len_preorder(const AdcComplex& K);

// Table of positive elements indexed by degree and side, as produced by the
// atom construction and by cell enumeration.
struct CellTable {
    int dimension = 0;
    // rows[k][eps], 0 <= k <= dimension; rows[dimension][0] == rows[dimension][1]
    std::vector<std::array<ChainElement, 2>> rows;
    bool augmentation_ok = false;

    bool operator==(const CellTable& other) const {
        return dimension == other.dimension && rows == other.rows;
    }
    std::string to_string() const;
};

// Iterated negative/positive parts of differentials below a basis element.
CellTable atom(const AdcComplex& K, const Id& x);

struct BasisClassification {
    bool unital = false;
    bool strongly_loop_free = false;
    bool steiner_strong = false;
};

BasisClassification classify_basis(const AdcComplex& K);

}  // namespace adc
