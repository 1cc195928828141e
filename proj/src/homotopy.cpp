#include "adc/homotopy.hpp"

namespace adc {

namespace {

ChainElement apply_graded(const std::map<Id, ChainElement>& action, const ChainElement& x,
                          int shift) {
    ChainElement out(x.degree() + shift);
    for (const auto& [id, c] : x.terms()) {
        auto it = action.find(id);
        if (it == action.end())
            throw InputError("graded map has no value on " + id);
        ChainElement hx = it->second;
        hx *= c;
        out += hx;
    }
    return out;
}

}  // namespace

ChainElement Antihomotopy::apply(const Id& id) const {
    auto it = action.find(id);
    if (it == action.end())
        throw InputError("antihomotopy has no value on " + id);
    return it->second;
}

ChainElement Antihomotopy::apply(const ChainElement& x) const {
    return apply_graded(action, x, 1);
}

ChainElement TwoAntihomotopy::apply(const Id& id) const {
    auto it = action.find(id);
    if (it == action.end())
        throw InputError("2-antihomotopy has no value on " + id);
    return it->second;
}

ChainElement TwoAntihomotopy::apply(const ChainElement& x) const {
    return apply_graded(action, x, 2);
}

Antihomotopy zero_antihomotopy(const AdcMorphism& f, const AdcMorphism& g) {
    Antihomotopy h;
    h.from = f;
    h.to = g;
    for (int i = 0; i <= f.source->max_degree; ++i)
        for (const Id& id : f.source->basis[i])
            h.action.emplace(id, ChainElement(i + 1));
    return h;
}

TwoAntihomotopy zero_two_antihomotopy(const Antihomotopy& h, const Antihomotopy& k) {
    TwoAntihomotopy H;
    H.from = h;
    H.to = k;
    for (int i = 0; i <= h.from.source->max_degree; ++i)
        for (const Id& id : h.from.source->basis[i])
            H.action.emplace(id, ChainElement(i + 2));
    return H;
}

namespace {

// Shared identity check: d_{i+shift} M_i - M_{i-1} d_i = (-1)^i (to_i - from_i)
// where `to`/`from` evaluate the endpoint maps at shift-1 (morphisms) or
// shift-2 (antihomotopies).
template <typename From, typename To>
ValidationReport validate_graded(const AdcComplex& K, const AdcComplex& L,
                                 const std::map<Id, ChainElement>& action, int shift,
                                 const From& from, const To& to) {
    ValidationReport rep;
    for (int i = 0; i <= K.max_degree; ++i)
        for (const Id& id : K.basis[i]) {
            auto it = action.find(id);
            if (it == action.end()) {
                rep.add(Issue::Kind::Input, "missing-value", "no value on " + id, id);
                continue;
            }
            const ChainElement& hx = it->second;
            ValidationReport elem = validate_element(L, hx);
            if (!elem.ok()) {
                for (auto& issue : elem.issues)
                    rep.issues.push_back(issue);
                continue;
            }
            if (!hx.is_zero() && hx.degree() != i + shift) {
                rep.add(Issue::Kind::Input, "degree-mismatch",
                        "image of " + id + " has degree " + std::to_string(hx.degree()) +
                            ", expected " + std::to_string(i + shift),
                        id);
                continue;
            }
            if (!hx.is_positive())
                rep.add(Issue::Kind::Algebra, "positivity",
                        "image of " + id + " is not positive: " + hx.to_string(), id);
        }
    if (rep.has_input_errors())
        return rep;

    for (int i = 0; i <= K.max_degree; ++i)
        for (const Id& id : K.basis[i]) {
            ChainElement lhs = L.d(apply_graded(action, ChainElement::single(i, id), shift));
            if (i >= 1)
                lhs -= apply_graded(action, K.d(id), shift);
            ChainElement rhs = to(id) - from(id);
            if (i % 2 == 1)
                rhs *= -1;
            if (lhs != rhs)
                rep.add(Issue::Kind::Algebra, "shift-identity",
                        "on " + id + ": d.h - h.d = " + lhs.to_string() + ", expected " +
                            rhs.to_string(),
                        id);
        }
    return rep;
}

}  // namespace

ValidationReport validate_antihomotopy(const Antihomotopy& h) {
    ValidationReport rep;
    if (h.from.source.get() != h.to.source.get() &&
        !same_presentation(*h.from.source, *h.to.source))
        rep.add(Issue::Kind::Input, "endpoint-mismatch", "endpoint maps have different sources");
    if (h.from.target.get() != h.to.target.get() &&
        !same_presentation(*h.from.target, *h.to.target))
        rep.add(Issue::Kind::Input, "endpoint-mismatch", "endpoint maps have different targets");
    if (!rep.ok())
        return rep;
    auto from = [&](const Id& id) { return h.from.apply(id); };
    auto to = [&](const Id& id) { return h.to.apply(id); };
    ValidationReport core =
        validate_graded(*h.from.source, *h.from.target, h.action, 1, from, to);
    for (auto& issue : core.issues)
        rep.issues.push_back(issue);
    return rep;
}

ValidationReport validate_antihomotopy(const TwoAntihomotopy& H) {
    ValidationReport rep;
    if (!(H.from.from == H.to.from) || !(H.from.to == H.to.to))
        rep.add(Issue::Kind::Input, "endpoint-mismatch",
                "endpoint antihomotopies do not share endpoints");
    if (!rep.ok())
        return rep;
    auto from = [&](const Id& id) { return H.from.apply(id); };
    auto to = [&](const Id& id) { return H.to.apply(id); };
    ValidationReport core =
        validate_graded(*H.from.from.source, *H.from.from.target, H.action, 2, from, to);
    for (auto& issue : core.issues)
        rep.issues.push_back(issue);
    return rep;
}

Antihomotopy precompose(const Antihomotopy& h, const AdcMorphism& u) {
    if (u.target.get() != h.from.source.get() && !same_presentation(*u.target, *h.from.source))
        throw InputError("precompose: morphism target does not match antihomotopy source");
    Antihomotopy out;
    out.from = compose(h.from, u);
    out.to = compose(h.to, u);
    for (int i = 0; i <= u.source->max_degree; ++i)
        for (const Id& id : u.source->basis[i])
            out.action.emplace(id, h.apply(u.apply(id)));
    return out;
}

Antihomotopy postcompose(const AdcMorphism& v, const Antihomotopy& h) {
    if (h.from.target.get() != v.source.get() && !same_presentation(*h.from.target, *v.source))
        throw InputError("postcompose: antihomotopy target does not match morphism source");
    Antihomotopy out;
    out.from = compose(v, h.from);
    out.to = compose(v, h.to);
    for (const auto& [id, val] : h.action)
        out.action.emplace(id, v.apply(val));
    return out;
}

Antihomotopy add(const Antihomotopy& h, const Antihomotopy& k) {
    if (!(h.to == k.from))
        throw InputError("add: antihomotopy endpoints do not chain");
    Antihomotopy out;
    out.from = h.from;
    out.to = k.to;
    for (const auto& [id, val] : h.action)
        out.action.emplace(id, val + k.apply(id));
    return out;
}

ValidationReport validate_retract_structure(const RetractStructure& s) {
    ValidationReport rep;
    const AdcMorphism& i = s.inclusion;
    const AdcMorphism& r = s.retraction;

    AdcMorphism ri = compose(r, i);
    AdcMorphism idK = identity_morphism(i.source);
    if (!(ri == idK))
        rep.add(Issue::Kind::Algebra, "retraction", "r.i is not the identity");

    AdcMorphism ir = compose(i, r);
    if (!(s.homotopy.from == identity_morphism(i.target)))
        rep.add(Issue::Kind::Input, "endpoint-mismatch", "homotopy does not start at id");
    if (!(s.homotopy.to == ir))
        rep.add(Issue::Kind::Input, "endpoint-mismatch", "homotopy does not end at i.r");
    ValidationReport hrep = validate_antihomotopy(s.homotopy);
    for (auto& issue : hrep.issues)
        rep.issues.push_back(issue);

    if (s.strong)
        for (const auto& ids : i.source->basis)
            for (const Id& id : ids) {
                ChainElement hi = s.homotopy.apply(i.apply(id));
                if (!hi.is_zero())
                    rep.add(Issue::Kind::Algebra, "strong",
                            "h(i(" + id + ")) = " + hi.to_string(), id);
            }
    if (s.over_base)
        for (const auto& ids : i.target->basis)
            for (const Id& id : ids) {
                ChainElement rh = r.apply(s.homotopy.apply(id));
                if (!rh.is_zero())
                    rep.add(Issue::Kind::Algebra, "over-base",
                            "r(h(" + id + ")) = " + rh.to_string(), id);
            }
    if (s.square_zero)
        for (const auto& ids : i.target->basis)
            for (const Id& id : ids) {
                ChainElement hh = s.homotopy.apply(s.homotopy.apply(id));
                if (!hh.is_zero())
                    rep.add(Issue::Kind::Algebra, "square-zero",
                            "h(h(" + id + ")) = " + hh.to_string(), id);
            }
    return rep;
}

}  // namespace adc
