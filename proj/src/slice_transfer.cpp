#include "adc/slice_transfer.hpp"

#include <algorithm>
#include <numeric>

namespace adc {

ValidationReport validate_triangle(const SliceTriangle& t) {
    ValidationReport rep;
    auto merge = [&](ValidationReport r) {
        for (auto& issue : r.issues)
            rep.issues.push_back(issue);
    };
    merge(validate_morphism(t.f));
    merge(validate_morphism(t.g));
    merge(validate_morphism(t.g_prime));
    RigidOrderedReport rig = is_rigid_ordered_inclusion(t.g_prime);
    if (!rig.rigid_ordered)
        rep.add(Issue::Kind::Algebra, "rigid-ordered", rig.counterexample);
    if (!(t.k.from == t.g))
        rep.add(Issue::Kind::Input, "endpoint-mismatch", "k does not start at g");
    if (!(t.k.to == compose(t.g_prime, t.f)))
        rep.add(Issue::Kind::Input, "endpoint-mismatch", "k does not end at g'.f");
    merge(validate_antihomotopy(t.k));
    return rep;
}

ValidationReport validate_cone(const SliceCone& c) {
    ValidationReport rep;
    auto merge = [&](ValidationReport r) {
        for (auto& issue : r.issues)
            rep.issues.push_back(issue);
    };
    merge(validate_triangle(c.front()));
    merge(validate_triangle(c.back()));
    if (!(c.l.from == c.f) || !(c.l.to == c.f_prime))
        rep.add(Issue::Kind::Input, "endpoint-mismatch", "l is not an antihomotopy f -> f'");
    merge(validate_antihomotopy(c.l));
    Antihomotopy glk = add(c.k, postcompose(c.g_prime, c.l));
    if (!(c.H.from == glk) || !(c.H.to == c.k_prime))
        rep.add(Issue::Kind::Input, "endpoint-mismatch", "H is not g'.l + k -> k'");
    merge(validate_antihomotopy(c.H));
    return rep;
}

PsiResult psi(const SliceTriangle& t, ComplexPtr T) {
    PsiResult out;
    out.domain = join_complex(t.f.source, T, t.f.source->max_degree + 1 + T->max_degree);
    out.prime_T = join_complex(t.f.target, T, t.f.target->max_degree + 1 + T->max_degree);
    out.target = pushout_along_rigid_inclusion(t.g_prime, join_inclusions(out.prime_T).iota1);

    out.psi.source = out.domain.complex;
    out.psi.target = out.target.complex;
    // The second factor is the convention carrier: f(∅) = ∅, k(∅) = 0 and
    // e(y) = 0 above degree 0.
    for (const auto& [id, xy] : out.domain.factors) {
        const auto& [x, y] = xy;
        ChainElement value;
        if (!y) {
            value = out.target.leg_from_L.apply(t.g.apply(*x));
        } else if (!x) {
            value = out.target.leg_from_M.apply(
                out.prime_T.pair(std::nullopt, ChainElement::single(T->degree(*y), *y)));
        } else {
            ChainElement fy = out.prime_T.pair(t.f.apply(*x),
                                               ChainElement::single(T->degree(*y), *y));
            value = out.target.leg_from_M.apply(fy);
            if (T->degree(*y) == 0) {
                ChainElement kx = out.target.leg_from_L.apply(t.k.apply(*x));
                kx *= T->e(*y);
                value += kx;
            }
        }
        out.psi.action.emplace(id, std::move(value));
    }
    return out;
}

SliceTriangle compose_triangles(const SliceTriangle& t1, const SliceTriangle& t2) {
    if (!(t2.g == t1.g_prime))
        throw InputError("triangles do not stack: second base leg must be the first inclusion");
    SliceTriangle out;
    out.f = compose(t2.f, t1.f);
    out.g = t1.g;
    out.g_prime = t2.g_prime;
    out.k = add(t1.k, precompose(t2.k, t1.f));
    return out;
}

bool psi_composition_law_holds(const SliceTriangle& t1, const SliceTriangle& t2, ComplexPtr T) {
    PsiResult p1 = psi(t1, T);
    PsiResult p2 = psi(t2, T);
    PsiResult pc = psi(compose_triangles(t1, t2), T);
    // Extend psi(t2) over the first amalgam: identity on the L part, psi(t2)
    // on the K'*T part; then compare the composite against psi(composite).
    AdcMorphism ext = amalgam_extend(p1.target, p2.target.leg_from_L, p2.psi);
    AdcMorphism lhs = compose(ext, p1.psi);
    return lhs == pc.psi;
}

ChiResult chi(const SliceCone& c, ComplexPtr T) {
    ChiResult out;
    ComplexPtr interval = oriental_complex(1);
    out.interval_T = tensor_complex(interval, T, 1 + T->max_degree);
    out.domain = join_complex(c.f.source, out.interval_T.complex,
                              c.f.source->max_degree + 2 + T->max_degree);
    out.prime_T = join_complex(c.f.target, T, c.f.target->max_degree + 1 + T->max_degree);
    out.target = pushout_along_rigid_inclusion(c.g_prime, join_inclusions(out.prime_T).iota1);

    out.chi.source = out.domain.complex;
    out.chi.target = out.target.complex;
    for (const auto& [id, xy] : out.domain.factors) {
        const auto& [x, w] = xy;
        ChainElement value;
        if (!w) {
            value = out.target.leg_from_L.apply(c.g.apply(*x));
        } else {
            const auto& [eps, y] = out.interval_T.factors.at(*w);
            int ydeg = T->degree(y);
            auto row = [&](const AdcMorphism& endpoint, const Antihomotopy& anti) {
                ChainElement v;
                if (!x) {
                    v = out.target.leg_from_M.apply(
                        out.prime_T.pair(std::nullopt, ChainElement::single(ydeg, y)));
                } else {
                    v = out.target.leg_from_M.apply(out.prime_T.pair(
                        endpoint.apply(*x), ChainElement::single(ydeg, y)));
                    if (ydeg == 0) {
                        ChainElement kx = out.target.leg_from_L.apply(anti.apply(*x));
                        kx *= T->e(y);
                        v += kx;
                    }
                }
                return v;
            };
            if (eps == "0") {
                value = row(c.f_prime, c.k_prime);
            } else if (eps == "1") {
                value = row(c.f, c.k);
            } else {
                // (01) row: l(x) * y + e(y) H(x), zero when x = ∅.
                if (x) {
                    value = out.target.leg_from_M.apply(
                        out.prime_T.pair(c.l.apply(*x), ChainElement::single(ydeg, y)));
                    if (ydeg == 0) {
                        ChainElement Hx = out.target.leg_from_L.apply(c.H.apply(*x));
                        Hx *= T->e(y);
                        value += Hx;
                    }
                } else {
                    value = ChainElement(out.domain.complex->degree(id));
                }
            }
        }
        out.chi.action.emplace(id, std::move(value));
    }
    return out;
}

AdcMorphism chi_endpoint(const ChiResult& result, ComplexPtr K, ComplexPtr T, int eps,
                         const JoinProduct& K_T) {
    // K * ((eps) (x) -) : K * T -> K * (c(Δ1) (x) T).
    AdcMorphism incl;
    incl.source = T;
    incl.target = result.interval_T.complex;
    for (const auto& ids : T->basis)
        for (const Id& y : ids) {
            Id image = tensor_id(std::to_string(eps), y);
            incl.action.emplace(y,
                                ChainElement::single(T->degree(y), image));
        }
    AdcMorphism embed = join_morphism(identity_morphism(K), incl, K_T, result.domain);
    return compose(result.chi, embed);
}

SliceTriangle vertex_triangle(int m) {
    RetractStructure r = vertex_retraction(m);
    SliceTriangle t;
    t.f = r.retraction;                                 // c(Δm) -> c(Δ0)
    t.g = identity_morphism(r.inclusion.target);        // c(Δm)
    t.g_prime = r.inclusion;                            // c(Δ0) -> c(Δm)
    t.k = r.homotopy;                                   // id -> m.r'
    return t;
}

SliceCone vertex_cone(int m) {
    RetractStructure r = vertex_retraction(m);
    ComplexPtr Km = r.inclusion.target;
    SliceCone c;
    c.f = identity_morphism(Km);
    c.f_prime = compose(r.inclusion, r.retraction);
    c.g = identity_morphism(Km);
    c.g_prime = identity_morphism(Km);
    c.k = zero_antihomotopy(c.g, c.f);          // id -> id
    c.k_prime = r.homotopy;                     // id -> m.r'
    c.l = r.homotopy;                           // id -> m.r'
    c.H = zero_two_antihomotopy(add(c.k, postcompose(c.g_prime, c.l)), c.k_prime);
    return c;
}

namespace {

// The closed eleven-case table for the vertex cone, stated on the join basis
// of c(Δm) * c(Δn).
AdcMorphism chi_phi_table(int m, const SimplexMap& phi, const JoinProduct& join_mn) {
    AdcMorphism table;
    table.source = join_mn.complex;
    table.target = join_mn.complex;
    auto tuple_or_zero = [&](const std::vector<int>& t, const std::optional<std::vector<int>>& u) {
        // join generator of the (possibly collapsed) tuples; zero on repeats
        std::optional<Id> left, right;
        if (!t.empty()) {
            for (std::size_t i = 1; i < t.size(); ++i)
                if (t[i] <= t[i - 1])
                    return ChainElement(0);
            left = tuple_id(t);
        }
        if (u && !u->empty()) {
            for (std::size_t i = 1; i < u->size(); ++i)
                if ((*u)[i] <= (*u)[i - 1])
                    return ChainElement(0);
            right = tuple_id(*u);
        }
        if (!left && !right)
            return ChainElement(0);
        Id id = join_id(left, right);
        return ChainElement::single(join_mn.complex->degree(id), id);
    };

    for (const auto& [id, xy] : join_mn.factors) {
        const auto& [x, y] = xy;
        std::vector<int> I = x ? parse_tuple(*x) : std::vector<int>{};
        std::vector<int> J = y ? parse_tuple(*y) : std::vector<int>{};
        int p = static_cast<int>(I.size()) - 1;
        int q = static_cast<int>(J.size()) - 1;
        int r = 0;
        for (int j : J)
            if (phi.values[j] == 0)
                ++r;

        ChainElement value(join_mn.complex->degree(id));
        auto I_m = I;
        I_m.push_back(m);
        std::vector<int> J_tail(J.begin() + std::min<std::size_t>(1, J.size()), J.end());
        if (r == 0) {
            value = ChainElement::single(join_mn.complex->degree(id), id);
        } else if (r == 1 && p == -1) {
            value = tuple_or_zero({}, J);
        } else if (r == 1 && p == 0 && q == 0) {
            value = tuple_or_zero({m}, J) + tuple_or_zero({I[0], m}, std::nullopt);
        } else if (r == 1 && p == 0 && q > 0) {
            value = tuple_or_zero({m}, J) + tuple_or_zero({I[0], m}, J_tail);
        } else if (r == 1 && p > 0 && q == 0) {
            value = tuple_or_zero(I_m, std::nullopt);
        } else if (r == 1 && p > 0 && q > 0) {
            value = tuple_or_zero(I_m, J_tail);
        } else if (r >= 2 && p == -1) {
            value = tuple_or_zero({}, J);
        } else if (r >= 2 && p == 0 && q == 0) {
            value = tuple_or_zero({m}, J) + tuple_or_zero({I[0], m}, std::nullopt);
        } else if (r >= 2 && p == 0 && q > 0) {
            value = tuple_or_zero({m}, J);
        } else if (r == 2 && p > 0 && q == 0) {
            value = tuple_or_zero(I_m, std::nullopt);
        } else {
            value = ChainElement(join_mn.complex->degree(id));
        }
        table.action.emplace(id, std::move(value));
    }
    return table;
}

}  // namespace

ChiPhiResult chi_phi(const SliceCone& cone, const SimplexMap& phi) {
    if (phi.n != 1)
        throw InputError("chi_phi expects a map into [1]");
    ComplexPtr Km = cone.f.source;
    if (!(cone.g == identity_morphism(Km)) || !(cone.g_prime == identity_morphism(Km)))
        throw InputError("chi_phi expects the vertex cone over an oriental");
    int m = Km->max_degree;
    int n = phi.m;
    ComplexPtr Kn = oriental_complex(n);

    ChiPhiResult out;
    out.join_mn = join_complex(Km, Kn, m + 1 + n);
    ChiResult c = chi(cone, Kn);

    // K * g_phi, then chi; the pushout along the identity is the join itself.
    AdcMorphism gphi = g_phi(phi, Side::Oplax, std::max(default_degree_cap(), 2 * n));
    AdcMorphism whisker = join_morphism(identity_morphism(Km), gphi, out.join_mn, c.domain);
    AdcMorphism composite = compose(c.chi, whisker);
    if (!same_presentation(*composite.target, *out.join_mn.complex))
        throw InternalError("vertex-cone pushout did not collapse onto the join");
    composite.target = out.join_mn.complex;

    AdcMorphism table = chi_phi_table(m, phi, out.join_mn);
    if (!(composite == table))
        throw InternalError("chi_phi composite and closed table disagree for phi = " +
                            phi.to_string());
    out.chi_phi = composite;

    AdcMorphism iso = oriental_join_iso(out.join_mn);
    out.on_oriental = compose(iso, compose(out.chi_phi, inverse_of_iso(iso)));
    return out;
}

QProjections q_projections(const TensorProduct& P) {
    QProjections out;
    out.q1.source = P.complex;
    out.q1.target = P.left;
    out.q2.source = P.complex;
    out.q2.target = P.right;
    for (const auto& [id, xy] : P.factors) {
        const auto& [x, y] = xy;
        int px = P.left->degree(x);
        int py = P.right->degree(y);
        ChainElement v1(px);
        if (py == 0)
            v1.add_term(x, P.right->e(y));
        out.q1.action.emplace(id, std::move(v1));
        ChainElement v2(py);
        if (px == 0)
            v2.add_term(y, P.left->e(x));
        out.q2.action.emplace(id, std::move(v2));
    }
    return out;
}

AdcMorphism aw_section(const AdcMorphism& x, const AdcMorphism& y, const TensorProduct& KL) {
    if (x.source->max_degree != y.source->max_degree ||
        !same_presentation(*x.source, *y.source))
        throw InputError("aw_section needs simplices of the same dimension");
    int n = x.source->max_degree;
    AdcMorphism nabla = aw_diagonal(n, Side::Oplax, 2 * n);
    TensorProduct nn = tensor_complex(x.source, x.source, 2 * n);
    return compose(tensor_morphism(x, y, nn, KL), nabla);
}

SectionCheck check_q_section(ComplexPtr K, int trunc, Int coeff_cap, int jobs) {
    SectionCheck out;
    out.budget.coeff_cap = coeff_cap;
    ComplexPtr interval = oriental_complex(1);
    TensorProduct P = tensor_complex(interval, K, 1 + K->max_degree);
    QProjections q = q_projections(P);
    for (int n = 0; n <= trunc; ++n) {
        std::vector<AdcMorphism> simplices =
            enumerate_morphisms(oriental_complex(n), K, out.budget, {}, jobs);
        for (const SimplexMap& phi : all_monotone_maps(n, 1)) {
            AdcMorphism cphi = cosimplicial_image(phi);
            for (const AdcMorphism& x : simplices) {
                AdcMorphism s = aw_section(cphi, x, P);
                ++out.pairs_checked;
                if (!(compose(q.q1, s) == cphi) || !(compose(q.q2, s) == x))
                    out.ok = false;
            }
        }
    }
    return out;
}

AdcMorphism lax_transformation_from_antihomotopy(const Antihomotopy& h) {
    ComplexPtr K = h.from.source;
    ComplexPtr interval = oriental_complex(1);
    TensorProduct P = tensor_complex(K, interval, K->max_degree + 1);
    AdcMorphism alpha;
    alpha.source = P.complex;
    alpha.target = h.from.target;
    for (const auto& [id, xy] : P.factors) {
        const auto& [x, eps] = xy;
        if (eps == "0")
            alpha.action.emplace(id, h.from.apply(x));
        else if (eps == "1")
            alpha.action.emplace(id, h.to.apply(x));
        else
            alpha.action.emplace(id, h.apply(x));
    }
    return alpha;
}

NerveHomotopy nerve_homotopy(const TensorProduct& domain, const AdcMorphism& alpha, Side side,
                             int trunc, Int coeff_cap, int jobs) {
    if (!same_presentation(*domain.complex, *alpha.source))
        throw InputError("alpha is not defined on the given product complex");
    ComplexPtr K = side == Side::Oplax ? domain.right : domain.left;
    ComplexPtr L = alpha.target;

    NerveHomotopy out;
    // Chain-level endpoints alpha((eps) (x) -) resp. alpha(- (x) (eps)).
    auto endpoint = [&](const std::string& eps) {
        AdcMorphism u;
        u.source = K;
        u.target = L;
        for (const auto& ids : K->basis)
            for (const Id& x : ids) {
                Id id = side == Side::Oplax ? tensor_id(eps, x) : tensor_id(x, eps);
                u.action.emplace(x, alpha.apply(id));
            }
        return u;
    };
    out.endpoint_from = endpoint("0");
    out.endpoint_to = endpoint("1");

    EnumerationBudget budget;
    budget.coeff_cap = coeff_cap;
    out.source_nerve = std::make_shared<Nerve>(nerve(K, trunc, budget, jobs));
    out.target_nerve = std::make_shared<Nerve>(nerve(L, trunc, budget, jobs));
    out.interval = std::make_shared<Product>(product_with_interval(out.source_nerve->sset));

    out.homotopy.source = &out.interval->sset;
    out.homotopy.target = &out.target_nerve->sset;
    out.homotopy.level_map.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        AdcMorphism nabla = aw_diagonal(n, Side::Oplax, 2 * n);
        TensorProduct nn = tensor_complex(oriental_complex(n), oriental_complex(n),
                                          std::max(2 * n, 1));
        for (const auto& [phi_idx, x_idx] : out.interval->pairs[n]) {
            SimplexMap phi = std_simplex_map_at(1, n, phi_idx);
            AdcMorphism cphi = cosimplicial_image(phi);
            const AdcMorphism& x = out.source_nerve->simplices[n][x_idx];
            AdcMorphism spread =
                side == Side::Oplax ? tensor_morphism(cphi, x, nn, domain)
                                    : tensor_morphism(x, cphi, nn, domain);
            AdcMorphism value = compose(alpha, compose(spread, nabla));
            out.homotopy.level_map[n].push_back(out.target_nerve->index_of(n, value));
        }
    }

    auto nerve_of = [&](const AdcMorphism& u) {
        SimplicialMap f;
        f.source = &out.source_nerve->sset;
        f.target = &out.target_nerve->sset;
        f.level_map.resize(trunc + 1);
        for (int n = 0; n <= trunc; ++n)
            for (const AdcMorphism& x : out.source_nerve->simplices[n])
                f.level_map[n].push_back(out.target_nerve->index_of(n, compose(u, x)));
        return f;
    };
    out.from = nerve_of(out.endpoint_from);
    out.to = nerve_of(out.endpoint_to);
    out.report = validate_homotopy(*out.interval, out.homotopy, out.from, out.to);
    return out;
}

int NerveSlice::index_of(int level, const AdcMorphism& f) const {
    const auto& level_keys = keys.at(level);
    std::string key = f.to_string();
    auto it = std::lower_bound(level_keys.begin(), level_keys.end(), key);
    if (it == level_keys.end() || *it != key)
        return -1;
    return static_cast<int>(it - level_keys.begin());
}

std::shared_ptr<NerveSlice> nerve_slice(int m, ComplexPtr M, const AdcMorphism& anchor,
                                        int trunc, Int coeff_cap, int jobs) {
    if (anchor.source->max_degree != m || !same_presentation(*anchor.source, *oriental_complex(m)))
        throw InputError("anchor must be an m-simplex of the nerve of the target");
    ValidationReport arep = validate_morphism(anchor);
    if (!arep.ok())
        throw InputError("anchor is not a morphism: " + arep.to_string());

    auto S = std::make_shared<NerveSlice>();
    S->m = m;
    S->trunc = trunc;
    S->target = M;
    S->anchor = anchor;
    S->budget.coeff_cap = coeff_cap;
    S->simplices.resize(trunc + 1);
    S->keys.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        ComplexPtr big = oriental_complex(m + 1 + n);
        // Pin every tuple inside the front block to the anchor's value.
        MorphismConstraint pin;
        for (const auto& ids : big->basis)
            for (const Id& id : ids) {
                std::vector<int> t = parse_tuple(id);
                if (t.back() <= m)
                    pin[id] = anchor.apply(id);
            }
        S->simplices[n] = enumerate_morphisms(big, M, S->budget, pin, jobs);
        for (const AdcMorphism& f : S->simplices[n])
            S->keys[n].push_back(f.to_string());
    }

    S->sset.cap = trunc;
    S->sset.labels.resize(trunc + 1);
    S->sset.face.resize(trunc + 1);
    S->sset.degen.resize(std::max(trunc, 0));
    for (int n = 0; n <= trunc; ++n)
        for (std::size_t i = 0; i < S->simplices[n].size(); ++i)
            S->sset.labels[n].push_back("t" + std::to_string(n) + "_" + std::to_string(i));
    for (int n = 1; n <= trunc; ++n) {
        S->sset.face[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            AdcMorphism delta = cosimplicial_image(SimplexMap::face(m + 1 + n, m + 1 + i));
            for (const AdcMorphism& f : S->simplices[n]) {
                int idx = S->index_of(n - 1, compose(f, delta));
                if (idx < 0)
                    throw InternalError("slice face left the enumerated slice");
                S->sset.face[n][i].push_back(idx);
            }
        }
    }
    for (int n = 0; n < trunc; ++n) {
        S->sset.degen[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            AdcMorphism sigma = cosimplicial_image(SimplexMap::degeneracy(m + 1 + n, m + 1 + i));
            for (const AdcMorphism& f : S->simplices[n]) {
                int idx = S->index_of(n + 1, compose(f, sigma));
                if (idx < 0)
                    throw InternalError("slice degeneracy left the enumerated slice");
                S->sset.degen[n][i].push_back(idx);
            }
        }
    }
    return S;
}

SdrReport slice_sdr_suite(int m, int n_trunc, ComplexPtr M, const AdcMorphism& anchor,
                          Int coeff_cap, int jobs) {
    SdrReport rep;
    auto fail = [&](const std::string& what) {
        if (rep.failure.empty())
            rep.failure = what;
    };

    // Slice below the anchor and below its last vertex.
    AdcMorphism anchor_vertex =
        compose(anchor, cosimplicial_image(SimplexMap::constant(0, m, m)));
    std::shared_ptr<NerveSlice> S = nerve_slice(m, M, anchor, n_trunc, coeff_cap, jobs);
    std::shared_ptr<NerveSlice> V = nerve_slice(0, M, anchor_vertex, n_trunc, coeff_cap, jobs);
    rep.budget_complete = S->budget.complete && V->budget.complete;
    for (int n = 0; n <= n_trunc; ++n) {
        rep.slice_counts.push_back(S->simplices[n].size());
        rep.vertex_slice_counts.push_back(V->simplices[n].size());
    }

    // r: precomposition with the face [1+n] -> [m+1+n] picking the last
    // vertex of the front block; realizes the commutative triangle action.
    SimplicialMap r_map;
    r_map.source = &S->sset;
    r_map.target = &V->sset;
    r_map.level_map.resize(n_trunc + 1);
    rep.r_well_defined = true;
    for (int n = 0; n <= n_trunc; ++n) {
        std::vector<int> vals(1 + n + 1);
        vals[0] = m;
        for (int j = 1; j <= n + 1; ++j)
            vals[j] = m + j;
        AdcMorphism rho = cosimplicial_image(SimplexMap(1 + n, m + 1 + n, vals));
        for (const AdcMorphism& z : S->simplices[n]) {
            int idx = V->index_of(n, compose(z, rho));
            if (idx < 0) {
                rep.r_well_defined = false;
                fail("r left the vertex slice at level " + std::to_string(n));
                idx = 0;
            }
            r_map.level_map[n].push_back(idx);
        }
    }

    // s: amalgam extension along psi of the vertex triangle.
    SliceTriangle tri = vertex_triangle(m);
    SimplicialMap s_map;
    s_map.source = &V->sset;
    s_map.target = &S->sset;
    s_map.level_map.resize(n_trunc + 1);
    rep.s_well_defined = true;
    for (int n = 0; n <= n_trunc; ++n) {
        ComplexPtr Kn = oriental_complex(n);
        PsiResult p = psi(tri, Kn);
        AdcMorphism iso_mn = oriental_join_iso(p.domain);
        AdcMorphism iso_0n = oriental_join_iso(p.prime_T);
        AdcMorphism from_join = inverse_of_iso(iso_mn);
        for (const AdcMorphism& v : V->simplices[n]) {
            AdcMorphism on_M = compose(v, iso_0n);
            AdcMorphism bar = amalgam_extend(p.target, anchor, on_M);
            AdcMorphism sv = compose(bar, compose(p.psi, from_join));
            int idx = S->index_of(n, sv);
            if (idx < 0) {
                rep.s_well_defined = false;
                fail("s left the slice at level " + std::to_string(n));
                idx = 0;
            }
            s_map.level_map[n].push_back(idx);
        }
    }

    // r.s = id on the vertex slice.
    rep.r_section = rep.r_well_defined && rep.s_well_defined;
    if (rep.r_section) {
        SimplicialMap rs = compose(r_map, s_map);
        for (int n = 0; n <= n_trunc && rep.r_section; ++n)
            for (std::size_t i = 0; i < V->simplices[n].size(); ++i)
                if (rs.apply(n, static_cast<int>(i)) != static_cast<int>(i)) {
                    rep.r_section = false;
                    fail("r.s != id at level " + std::to_string(n));
                }
    }

    // h: precomposition with the chi_phi endomorphisms.
    SliceCone cone = vertex_cone(m);
    Product interval = product_with_interval(S->sset);
    SimplicialMap h_map;
    h_map.source = &interval.sset;
    h_map.target = &S->sset;
    h_map.level_map.resize(n_trunc + 1);
    bool h_well_defined = true;
    for (int n = 0; n <= n_trunc; ++n) {
        // One conjugated endomorphism per phi at this level.
        std::vector<AdcMorphism> endos;
        for (const SimplexMap& phi : all_monotone_maps(n, 1))
            endos.push_back(chi_phi(cone, phi).on_oriental);
        for (const auto& [phi_idx, z_idx] : interval.pairs[n]) {
            const AdcMorphism& z = S->simplices[n][z_idx];
            AdcMorphism moved = compose(z, endos[phi_idx]);
            int idx = S->index_of(n, moved);
            if (idx < 0) {
                h_well_defined = false;
                fail("h left the slice at level " + std::to_string(n));
                idx = 0;
            }
            h_map.level_map[n].push_back(idx);
        }
    }

    SimplicialMap sr = compose(s_map, r_map);
    SimplicialMap id_S = identity_map(S->sset);
    id_S.source = &S->sset;
    id_S.target = &S->sset;
    ValidationReport hrep = validate_homotopy(interval, h_map, sr, id_S);
    rep.homotopy = h_well_defined && hrep.ok();
    if (!rep.homotopy && !hrep.ok())
        fail("homotopy audit: " + hrep.issues.front().message);

    // Strength: h is constant along s.
    rep.strong = true;
    for (int n = 0; n <= n_trunc && rep.strong; ++n)
        for (const SimplexMap& phi : all_monotone_maps(n, 1)) {
            int phi_idx = std_simplex_index(1, phi);
            for (std::size_t i = 0; i < V->simplices[n].size(); ++i) {
                int sv = s_map.apply(n, static_cast<int>(i));
                int pair = interval.index_of(n, phi_idx, sv);
                if (h_map.apply(n, pair) != sv) {
                    rep.strong = false;
                    fail("h moves a section simplex at level " + std::to_string(n));
                }
            }
        }

    // Over the base: the forgetful map to the nerve of M is untouched.
    rep.over_base = true;
    for (int n = 0; n <= n_trunc && rep.over_base; ++n) {
        std::vector<int> back(n + 1);
        std::iota(back.begin(), back.end(), m + 1);
        AdcMorphism back_face = cosimplicial_image(SimplexMap(n, m + 1 + n, back));
        for (const auto& [phi_idx, z_idx] : interval.pairs[n]) {
            const AdcMorphism& z = S->simplices[n][z_idx];
            const AdcMorphism& hz = S->simplices[n][h_map.apply(
                n, interval.index_of(n, phi_idx, z_idx))];
            if (!(compose(z, back_face) == compose(hz, back_face))) {
                rep.over_base = false;
                fail("forgetful image moved at level " + std::to_string(n));
            }
        }
    }
    return rep;
}

}  // namespace adc
