#pragma once

#include <doctest.h>

#include "adc/enumerate.hpp"

namespace adc::testing {

inline ChainElement elem(int degree, std::initializer_list<std::pair<Id, Int>> terms) {
    ChainElement x(degree);
    for (const auto& [id, c] : terms)
        x.add_term(id, c);
    return x;
}

// Small hand-rolled complex builder for constructed counterexamples.
struct Builder {
    AdcComplex k;
    Builder(std::string name, int max_degree) {
        k.name = std::move(name);
        k.max_degree = max_degree;
        k.basis.resize(max_degree + 1);
    }
    Builder& gen(int degree, const Id& id) {
        k.basis[degree].push_back(id);
        return *this;
    }
    Builder& d(const Id& id, ChainElement v) {
        k.diff[id] = std::move(v);
        return *this;
    }
    Builder& e(const Id& id, Int v) {
        k.aug[id] = v;
        return *this;
    }
    ComplexPtr done() { return finalize(std::move(k)); }
};

}  // namespace adc::testing
