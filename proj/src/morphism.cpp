#include "adc/morphism.hpp"

#include <sstream>

namespace adc {

ChainElement AdcMorphism::apply(const Id& id) const {
    auto it = action.find(id);
    if (it == action.end())
        throw InputError("morphism has no value on basis element " + id);
    return it->second;
}

ChainElement AdcMorphism::apply(const ChainElement& x) const {
    ChainElement out(x.degree());
    for (const auto& [id, c] : x.terms()) {
        ChainElement fx = apply(id);
        fx *= c;
        out += fx;
    }
    return out;
}

std::string AdcMorphism::to_string() const {
    std::ostringstream out;
    for (const auto& [id, val] : action)
        out << id << "->" << val.to_string() << ";";
    return out.str();
}

AdcMorphism identity_morphism(ComplexPtr K) {
    AdcMorphism f;
    f.source = K;
    f.target = K;
    for (int i = 0; i <= K->max_degree; ++i)
        for (const Id& id : K->basis[i])
            f.action.emplace(id, ChainElement::single(i, id));
    return f;
}

AdcMorphism compose(const AdcMorphism& g, const AdcMorphism& f) {
    if (f.target.get() != g.source.get() && !same_presentation(*f.target, *g.source))
        throw InputError("composition of morphisms with mismatched middle complex");
    AdcMorphism out;
    out.source = f.source;
    out.target = g.target;
    for (const auto& [id, val] : f.action)
        out.action.emplace(id, g.apply(val));
    return out;
}

ValidationReport validate_morphism(const AdcMorphism& f) {
    ValidationReport rep;
    const AdcComplex& K = *f.source;
    const AdcComplex& L = *f.target;

    for (int i = 0; i <= K.max_degree; ++i)
        for (const Id& id : K.basis[i]) {
            auto it = f.action.find(id);
            if (it == f.action.end()) {
                rep.add(Issue::Kind::Input, "missing-value", "no value on " + id, id);
                continue;
            }
            const ChainElement& fx = it->second;
            ValidationReport elem = validate_element(L, fx);
            if (!elem.ok()) {
                for (auto& issue : elem.issues)
                    rep.issues.push_back(issue);
                continue;
            }
            if (!fx.is_zero() && fx.degree() != i) {
                rep.add(Issue::Kind::Input, "degree-mismatch",
                        "image of " + id + " has degree " + std::to_string(fx.degree()), id);
                continue;
            }
            if (!fx.is_positive())
                rep.add(Issue::Kind::Algebra, "positivity",
                        "image of " + id + " is not positive: " + fx.to_string(), id);
        }
    for (const auto& [id, val] : f.action)
        if (!K.has(id))
            rep.add(Issue::Kind::Input, "unknown-id", "action on unknown id " + id, id);
    if (rep.has_input_errors())
        return rep;

    for (int i = 1; i <= K.max_degree; ++i)
        for (const Id& id : K.basis[i]) {
            ChainElement lhs = L.d(f.apply(id));
            ChainElement rhs = f.apply(K.d(id));
            if (lhs != rhs)
                rep.add(Issue::Kind::Algebra, "d-commutation",
                        "d(f(" + id + ")) = " + lhs.to_string() + " but f(d(" + id +
                            ")) = " + rhs.to_string(),
                        id);
        }
    for (const Id& id : K.basis.empty() ? std::vector<Id>{} : K.basis[0]) {
        Int lhs = L.e(f.apply(id));
        Int rhs = K.e(id);
        if (lhs != rhs)
            rep.add(Issue::Kind::Algebra, "e-preservation",
                    "e(f(" + id + ")) = " + std::to_string(lhs) + " but e(" + id +
                        ") = " + std::to_string(rhs),
                    id);
    }
    return rep;
}

namespace {

// f(x) must be a single basis element with coefficient 1.
std::optional<Id> basis_image(const ChainElement& fx) {
    if (fx.terms().size() != 1)
        return std::nullopt;
    const auto& [id, c] = *fx.terms().begin();
    if (c != 1)
        return std::nullopt;
    return id;
}

}  // namespace

RigidOrderedReport is_rigid_ordered_inclusion(const AdcMorphism& f) {
    RigidOrderedReport out;
    std::map<Id, Id> img;
    std::map<Id, Id> preimage;
    for (const auto& ids : f.source->basis)
        for (const Id& id : ids) {
            auto bi = basis_image(f.apply(id));
            if (!bi) {
                out.counterexample = "image of " + id + " is not a basis element";
                return out;
            }
            img[id] = *bi;
            auto [it, inserted] = preimage.emplace(*bi, id);
            if (!inserted) {
                out.counterexample = "not injective: " + it->second + " and " + id +
                                     " both map to " + *bi;
                return out;
            }
        }
    Preorder src = len_preorder(*f.source);
    Preorder dst = len_preorder(*f.target);
    for (const Id& x : src.elements)
        for (const Id& y : src.elements) {
            bool a = src.leq(x, y);
            bool b = dst.leq(img[x], img[y]);
            if (a != b) {
                out.counterexample = "order mismatch on (" + x + ", " + y + "): source " +
                                     (a ? "<=" : "!<=") + ", target " + (b ? "<=" : "!<=");
                return out;
            }
        }
    out.rigid_ordered = true;
    return out;
}

bool is_isomorphism(const AdcMorphism& f) {
    if (f.source->basis_size() != f.target->basis_size())
        return false;
    std::set<Id> hit;
    for (const auto& [id, val] : f.action) {
        auto bi = basis_image(val);
        if (!bi || !f.target->has(*bi, f.source->degree(id)))
            return false;
        if (!hit.insert(*bi).second)
            return false;
    }
    return validate_morphism(f).ok();
}

AdcMorphism inverse_of_iso(const AdcMorphism& f) {
    if (!is_isomorphism(f))
        throw InputError("morphism is not a basis bijection");
    AdcMorphism inv;
    inv.source = f.target;
    inv.target = f.source;
    for (const auto& [id, val] : f.action) {
        const Id& image = val.terms().begin()->first;
        inv.action.emplace(image, ChainElement::single(f.source->degree(id), id));
    }
    return inv;
}

}  // namespace adc
