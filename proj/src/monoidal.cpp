#include "adc/monoidal.hpp"

#include <cstdlib>

namespace adc {

int default_degree_cap() {
    static int cap = [] {
        if (const char* env = std::getenv("ADC_MAX_TOTAL_DEGREE")) {
            int v = std::atoi(env);
            if (v > 0)
                return v;
        }
        return 6;
    }();
    return cap;
}

Id tensor_id(const Id& left, const Id& right) { return "(" + left + "|" + right + ")"; }

Id join_id(const std::optional<Id>& left, const std::optional<Id>& right) {
    return "(" + (left ? *left : kEmptyToken) + "*" + (right ? *right : kEmptyToken) + ")";
}

ChainElement TensorProduct::pair(const ChainElement& x, const ChainElement& y) const {
    ChainElement out(x.degree() + y.degree());
    for (const auto& [xi, cx] : x.terms())
        for (const auto& [yi, cy] : y.terms())
            out.add_term(tensor_id(xi, yi), checked_mul(cx, cy));
    return out;
}

TensorProduct tensor_complex(ComplexPtr K, ComplexPtr L, int degree_cap) {
    if (K->max_degree + L->max_degree > degree_cap)
        throw InputError("tensor product exceeds the degree cap " + std::to_string(degree_cap));
    TensorProduct P;
    P.left = K;
    P.right = L;

    AdcComplex T;
    T.name = K->name + "(x)" + L->name;
    T.max_degree = K->max_degree + L->max_degree;
    T.basis.resize(T.max_degree + 1);
    for (int r = 0; r <= T.max_degree; ++r)
        for (int p = 0; p <= std::min(r, K->max_degree); ++p) {
            int q = r - p;
            if (q > L->max_degree)
                continue;
            for (const Id& x : K->basis[p])
                for (const Id& y : L->basis[q]) {
                    Id id = tensor_id(x, y);
                    T.basis[r].push_back(id);
                    P.factors.emplace(id, std::make_pair(x, y));
                    if (r == 0) {
                        T.aug[id] = checked_mul(K->e(x), L->e(y));
                    } else {
                        // d(x(x)y) = d(x)(x)y + (-1)^p x(x)d(y), degree-0 d = 0.
                        ChainElement dv(r - 1);
                        if (p >= 1) {
                            ChainElement dx = K->d(x);
                            for (const auto& [u, c] : dx.terms())
                                dv.add_term(tensor_id(u, y), c);
                        }
                        if (q >= 1) {
                            Int sign = (p % 2 == 0) ? 1 : -1;
                            ChainElement dy = L->d(y);
                            for (const auto& [v, c] : dy.terms())
                                dv.add_term(tensor_id(x, v), checked_mul(sign, c));
                        }
                        T.diff[id] = std::move(dv);
                    }
                }
        }
    P.complex = finalize(std::move(T));
    return P;
}

AdcMorphism tensor_morphism(const AdcMorphism& f, const AdcMorphism& g,
                            const TensorProduct& src, const TensorProduct& dst) {
    AdcMorphism out;
    out.source = src.complex;
    out.target = dst.complex;
    for (const auto& [id, xy] : src.factors)
        out.action.emplace(id, dst.pair(f.apply(xy.first), g.apply(xy.second)));
    return out;
}

AdcMorphism tensor_morphism(const AdcMorphism& f, const AdcMorphism& g) {
    TensorProduct src = tensor_complex(f.source, g.source);
    TensorProduct dst = tensor_complex(f.target, g.target);
    return tensor_morphism(f, g, src, dst);
}

AdcMorphism tensor_unit_left_collapse(const TensorProduct& unit_K) {
    if (unit_K.left->basis_size() != 1 || unit_K.left->max_degree != 0)
        throw InputError("left factor is not the tensor unit");
    AdcMorphism out;
    out.source = unit_K.complex;
    out.target = unit_K.right;
    for (const auto& [id, xy] : unit_K.factors)
        out.action.emplace(
            id, ChainElement::single(unit_K.right->degree(xy.second), xy.second));
    return out;
}

AdcMorphism tensor_unit_right_collapse(const TensorProduct& K_unit) {
    if (K_unit.right->basis_size() != 1 || K_unit.right->max_degree != 0)
        throw InputError("right factor is not the tensor unit");
    AdcMorphism out;
    out.source = K_unit.complex;
    out.target = K_unit.left;
    for (const auto& [id, xy] : K_unit.factors)
        out.action.emplace(id, ChainElement::single(K_unit.left->degree(xy.first), xy.first));
    return out;
}

AdcMorphism tensor_associator(const TensorProduct& ab, const TensorProduct& ab_c,
                              [[maybe_unused]] const TensorProduct& bc,
                              const TensorProduct& a_bc) {
    AdcMorphism out;
    out.source = ab_c.complex;
    out.target = a_bc.complex;
    for (const auto& [id, xy] : ab_c.factors) {
        const auto& [ab_id, c] = xy;
        const auto& [a, b] = ab.factors.at(ab_id);
        Id target = tensor_id(a, tensor_id(b, c));
        out.action.emplace(id, ChainElement::single(a_bc.complex->degree(target), target));
    }
    return out;
}

Id JoinProduct::id_of(const std::optional<Id>& l, const std::optional<Id>& r) const {
    return join_id(l, r);
}

ChainElement JoinProduct::pair(const std::optional<ChainElement>& x,
                               const std::optional<ChainElement>& y) const {
    int p = x ? x->degree() : -1;
    int q = y ? y->degree() : -1;
    ChainElement out(p + 1 + q);
    if (!x && !y)
        throw InternalError("join pair of two unit tokens");
    if (!x) {
        for (const auto& [yi, cy] : y->terms())
            out.add_term(join_id(std::nullopt, yi), cy);
        return out;
    }
    if (!y) {
        for (const auto& [xi, cx] : x->terms())
            out.add_term(join_id(xi, std::nullopt), cx);
        return out;
    }
    for (const auto& [xi, cx] : x->terms())
        for (const auto& [yi, cy] : y->terms())
            out.add_term(join_id(xi, yi), checked_mul(cx, cy));
    return out;
}

JoinProduct join_complex(ComplexPtr K, ComplexPtr L, int degree_cap) {
    if (K->max_degree + 1 + L->max_degree > degree_cap)
        throw InputError("join exceeds the degree cap " + std::to_string(degree_cap));
    JoinProduct P;
    P.left = K;
    P.right = L;

    AdcComplex J;
    J.name = K->name + "(*)" + L->name;
    J.max_degree = K->max_degree + 1 + L->max_degree;
    J.basis.resize(J.max_degree + 1);

    auto add_generator = [&](const std::optional<Id>& x, const std::optional<Id>& y) {
        int p = x ? K->degree(*x) : -1;
        int q = y ? L->degree(*y) : -1;
        int r = p + 1 + q;
        Id id = join_id(x, y);
        J.basis[r].push_back(id);
        P.factors.emplace(id, std::make_pair(x, y));
        if (r == 0) {
            J.aug[id] = x ? K->e(*x) : L->e(*y);
            return;
        }
        // d(x*y) = d(x)*y + (-1)^{p+1} x*d(y) with d(z) = e(z)∅ in degree 0
        // and d(∅) = 0.
        ChainElement dv(r - 1);
        if (x) {
            if (p >= 1) {
                ChainElement dx = K->d(*x);
                for (const auto& [u, c] : dx.terms())
                    dv.add_term(join_id(u, y), c);
            } else if (y) {
                dv.add_term(join_id(std::nullopt, *y), K->e(*x));
            }
        }
        if (y) {
            Int sign = ((p + 1) % 2 == 0) ? 1 : -1;
            if (q >= 1) {
                ChainElement dy = L->d(*y);
                for (const auto& [v, c] : dy.terms())
                    dv.add_term(join_id(x, v), checked_mul(sign, c));
            } else if (x) {
                dv.add_term(join_id(*x, std::nullopt), checked_mul(sign, L->e(*y)));
            }
        }
        J.diff[id] = std::move(dv);
    };

    for (int r = 0; r <= J.max_degree; ++r) {
        for (int p = -1; p <= K->max_degree; ++p) {
            int q = r - 1 - p;
            if (q < -1 || q > L->max_degree)
                continue;
            if (p == -1 && q == -1)
                continue;
            if (p == -1) {
                for (const Id& y : L->basis[q])
                    add_generator(std::nullopt, y);
            } else if (q == -1) {
                for (const Id& x : K->basis[p])
                    add_generator(x, std::nullopt);
            } else {
                for (const Id& x : K->basis[p])
                    for (const Id& y : L->basis[q])
                        add_generator(x, y);
            }
        }
    }
    P.complex = finalize(std::move(J));
    return P;
}

JoinInclusions join_inclusions(const JoinProduct& p) {
    JoinInclusions out;
    out.iota1.source = p.left;
    out.iota1.target = p.complex;
    for (const auto& ids : p.left->basis)
        for (const Id& x : ids) {
            Id id = join_id(x, std::nullopt);
            out.iota1.action.emplace(x, ChainElement::single(p.complex->degree(id), id));
        }
    out.iota2.source = p.right;
    out.iota2.target = p.complex;
    for (const auto& ids : p.right->basis)
        for (const Id& y : ids) {
            Id id = join_id(std::nullopt, y);
            out.iota2.action.emplace(y, ChainElement::single(p.complex->degree(id), id));
        }
    return out;
}

AdcMorphism join_morphism(const AdcMorphism& f, const AdcMorphism& g, const JoinProduct& src,
                          const JoinProduct& dst) {
    AdcMorphism out;
    out.source = src.complex;
    out.target = dst.complex;
    for (const auto& [id, xy] : src.factors) {
        const auto& [x, y] = xy;
        std::optional<ChainElement> fx =
            x ? std::optional<ChainElement>(f.apply(*x)) : std::nullopt;
        std::optional<ChainElement> gy =
            y ? std::optional<ChainElement>(g.apply(*y)) : std::nullopt;
        out.action.emplace(id, dst.pair(fx, gy));
    }
    return out;
}

AdcMorphism join_associator(const JoinProduct& ab, const JoinProduct& ab_c,
                            [[maybe_unused]] const JoinProduct& bc,
                            const JoinProduct& a_bc) {
    AdcMorphism out;
    out.source = ab_c.complex;
    out.target = a_bc.complex;
    for (const auto& [id, xy] : ab_c.factors) {
        const auto& [ab_id, c] = xy;
        std::optional<Id> a, b;
        if (ab_id) {
            const auto& inner = ab.factors.at(*ab_id);
            a = inner.first;
            b = inner.second;
        }
        std::optional<Id> inner_id;
        if (b || c)
            inner_id = join_id(b, c);
        Id target = join_id(a, inner_id);
        out.action.emplace(id, ChainElement::single(a_bc.complex->degree(target), target));
    }
    return out;
}

ComplexPtr disk_complex(int i) {
    if (i < 0)
        throw InputError("disk dimension must be non-negative");
    AdcComplex D;
    D.name = "disk" + std::to_string(i);
    D.max_degree = i;
    D.basis.resize(i + 1);
    auto lower = [](int k, int side) { return (side == 0 ? "s" : "t") + std::to_string(k); };
    for (int k = 0; k < i; ++k) {
        D.basis[k].push_back(lower(k, 0));
        D.basis[k].push_back(lower(k, 1));
    }
    Id top = "c" + std::to_string(i);
    D.basis[i].push_back(top);
    if (i == 0) {
        D.aug[top] = 1;
    } else {
        D.aug[lower(0, 0)] = 1;
        D.aug[lower(0, 1)] = 1;
        for (int k = 1; k < i; ++k)
            for (int side = 0; side <= 1; ++side) {
                ChainElement dv(k - 1);
                dv.add_term(lower(k - 1, 1), 1);
                dv.add_term(lower(k - 1, 0), -1);
                D.diff[lower(k, side)] = dv;
            }
        ChainElement dv(i - 1);
        dv.add_term(lower(i - 1, 1), 1);
        dv.add_term(lower(i - 1, 0), -1);
        D.diff[top] = dv;
    }
    return finalize(std::move(D));
}

PrincipalCell principal_cell(int i, int j, int degree_cap) {
    PrincipalCell out;
    ComplexPtr Di = disk_complex(i);
    ComplexPtr Dj = disk_complex(j);
    out.product = tensor_complex(Di, Dj, degree_cap);
    Id top = tensor_id("c" + std::to_string(i), "c" + std::to_string(j));
    out.cell = atom(*out.product.complex, top);
    if (!out.cell.augmentation_ok)
        throw InternalError("principal cell fails the augmentation condition");
    return out;
}

Pushout pushout_along_rigid_inclusion(const AdcMorphism& g_prime, const AdcMorphism& u) {
    RigidOrderedReport rig = is_rigid_ordered_inclusion(g_prime);
    if (!rig.rigid_ordered)
        throw InputError("pushout leg is not a rigid ordered inclusion: " + rig.counterexample);
    if (g_prime.source.get() != u.source.get() &&
        !same_presentation(*g_prime.source, *u.source))
        throw InputError("pushout legs have different sources");

    const AdcComplex& L = *g_prime.target;
    const AdcComplex& M = *u.target;

    // g'(x) -> u(x) rewriting table on identified basis elements of L.
    std::map<Id, ChainElement> rewrite;
    for (const auto& ids : g_prime.source->basis)
        for (const Id& x : ids) {
            const Id image = g_prime.apply(x).terms().begin()->first;
            rewrite.emplace(image, u.apply(x));
        }

    AdcComplex P;
    P.name = L.name + "+_" + g_prime.source->name + "+" + M.name;
    P.max_degree = std::max(L.max_degree, M.max_degree);
    P.basis.resize(P.max_degree + 1);

    auto rewrite_elem = [&](const ChainElement& v) {
        ChainElement out(v.degree());
        for (const auto& [id, c] : v.terms()) {
            auto it = rewrite.find(id);
            if (it == rewrite.end())
                out.add_term(id, c);
            else
                out += c * it->second;
        }
        return out;
    };

    for (int k = 0; k <= L.max_degree; ++k)
        for (const Id& id : L.basis[k]) {
            if (rewrite.count(id))
                continue;
            if (M.has(id))
                throw InputError("basis identifier collision in pushout: " + id);
            P.basis[k].push_back(id);
            if (k == 0)
                P.aug[id] = L.aug.at(id);
            else
                P.diff[id] = rewrite_elem(L.d(id));
        }
    for (int k = 0; k <= M.max_degree; ++k)
        for (const Id& id : M.basis[k]) {
            P.basis[k].push_back(id);
            if (k == 0)
                P.aug[id] = M.aug.at(id);
            else
                P.diff[id] = M.d(id);
        }
    while (P.max_degree > 0 && P.basis[P.max_degree].empty()) {
        P.basis.pop_back();
        --P.max_degree;
    }

    Pushout out;
    out.complex = finalize(std::move(P));
    out.g_prime = g_prime;
    out.u = u;
    out.leg_from_L.source = g_prime.target;
    out.leg_from_L.target = out.complex;
    for (const auto& ids : L.basis)
        for (const Id& id : ids) {
            auto it = rewrite.find(id);
            if (it == rewrite.end())
                out.leg_from_L.action.emplace(id, ChainElement::single(L.degree_of.at(id), id));
            else
                out.leg_from_L.action.emplace(id, it->second);
        }
    out.leg_from_M.source = u.target;
    out.leg_from_M.target = out.complex;
    for (const auto& ids : M.basis)
        for (const Id& id : ids)
            out.leg_from_M.action.emplace(id, ChainElement::single(M.degree_of.at(id), id));
    return out;
}

AdcMorphism amalgam_extend(const Pushout& p, const AdcMorphism& on_L, const AdcMorphism& on_M) {
    if (on_L.target.get() != on_M.target.get() &&
        !same_presentation(*on_L.target, *on_M.target))
        throw InputError("amalgam extension legs have different targets");
    if (!(compose(on_L, p.g_prime) == compose(on_M, p.u)))
        throw InputError("amalgam extension legs disagree on the shared subcomplex");
    AdcMorphism out;
    out.source = p.complex;
    out.target = on_L.target;
    for (const auto& ids : p.complex->basis)
        for (const Id& id : ids) {
            if (on_M.source->has(id))
                out.action.emplace(id, on_M.apply(id));
            else
                out.action.emplace(id, on_L.apply(id));
        }
    return out;
}

}  // namespace adc
