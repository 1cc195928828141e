#include "adc/orientals.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace adc {

SimplexMap::SimplexMap(int m_, int n_, std::vector<int> vals) : m(m_), n(n_), values(std::move(vals)) {
    if (static_cast<int>(values.size()) != m + 1)
        throw InputError("simplex map needs m+1 values");
    for (int i = 0; i <= m; ++i) {
        if (values[i] < 0 || values[i] > n)
            throw InputError("simplex map value out of range");
        if (i > 0 && values[i] < values[i - 1])
            throw InputError("simplex map is not monotone");
    }
}

bool SimplexMap::is_identity() const {
    if (m != n)
        return false;
    for (int i = 0; i <= m; ++i)
        if (values[i] != i)
            return false;
    return true;
}

SimplexMap SimplexMap::identity(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i)
        v[i] = i;
    return SimplexMap(n, n, std::move(v));
}

SimplexMap SimplexMap::constant(int m, int n, int value) {
    return SimplexMap(m, n, std::vector<int>(m + 1, value));
}

SimplexMap SimplexMap::face(int n, int i) {
    if (n < 1 || i < 0 || i > n)
        throw InputError("bad face index");
    std::vector<int> v;
    for (int k = 0; k <= n; ++k)
        if (k != i)
            v.push_back(k);
    return SimplexMap(n - 1, n, std::move(v));
}

SimplexMap SimplexMap::degeneracy(int n, int i) {
    if (i < 0 || i > n)
        throw InputError("bad degeneracy index");
    std::vector<int> v;
    for (int k = 0; k <= n + 1; ++k)
        v.push_back(k <= i ? k : k - 1);
    return SimplexMap(n + 1, n, std::move(v));
}

SimplexMap SimplexMap::dual() const {
    std::vector<int> v(m + 1);
    for (int i = 0; i <= m; ++i)
        v[i] = n - values[m - i];
    return SimplexMap(m, n, std::move(v));
}

std::string SimplexMap::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i <= m; ++i)
        out << (i ? "," : "") << values[i];
    out << "]";
    return out.str();
}

SimplexMap compose(const SimplexMap& g, const SimplexMap& f) {
    if (f.n != g.m)
        throw InputError("simplex maps do not compose");
    std::vector<int> v(f.m + 1);
    for (int i = 0; i <= f.m; ++i)
        v[i] = g.values[f.values[i]];
    return SimplexMap(f.m, g.n, std::move(v));
}

std::vector<SimplexMap> all_monotone_maps(int m, int n) {
    std::vector<SimplexMap> out;
    std::vector<int> cur(m + 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int low) {
        if (pos > m) {
            out.emplace_back(m, n, cur);
            return;
        }
        for (int v = low; v <= n; ++v) {
            cur[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 0);
    return out;
}

Id tuple_id(const std::vector<int>& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            out += ".";
        out += std::to_string(t[i]);
    }
    return out;
}

std::vector<int> parse_tuple(const Id& id) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < id.size()) {
        std::size_t dot = id.find('.', pos);
        if (dot == std::string::npos)
            dot = id.size();
        out.push_back(std::stoi(id.substr(pos, dot - pos)));
        pos = dot + 1;
    }
    return out;
}

ComplexPtr oriental_complex(int n) {
    if (n < 0)
        throw InputError("oriental dimension must be non-negative");
    AdcComplex K;
    K.name = "oriental" + std::to_string(n);
    K.max_degree = n;
    K.basis.resize(n + 1);

    // All strictly increasing tuples, by length then lexicographically.
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int low) {
        if (!cur.empty()) {
            int p = static_cast<int>(cur.size()) - 1;
            K.basis[p].push_back(tuple_id(cur));
        }
        for (int v = low; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    for (int p = 0; p <= n; ++p)
        std::sort(K.basis[p].begin(), K.basis[p].end(), [](const Id& a, const Id& b) {
            return parse_tuple(a) < parse_tuple(b);
        });

    for (int p = 1; p <= n; ++p)
        for (const Id& id : K.basis[p]) {
            std::vector<int> t = parse_tuple(id);
            ChainElement dv(p - 1);
            for (int k = 0; k <= p; ++k) {
                std::vector<int> face;
                for (int j = 0; j <= p; ++j)
                    if (j != k)
                        face.push_back(t[j]);
                dv.add_term(tuple_id(face), k % 2 == 0 ? 1 : -1);
            }
            K.diff[id] = std::move(dv);
        }
    for (const Id& id : K.basis[0])
        K.aug[id] = 1;
    return finalize(std::move(K));
}

AdcMorphism cosimplicial_image(const SimplexMap& phi) {
    AdcMorphism f;
    f.source = oriental_complex(phi.m);
    f.target = oriental_complex(phi.n);
    for (const auto& ids : f.source->basis)
        for (const Id& id : ids) {
            std::vector<int> t = parse_tuple(id);
            std::vector<int> img(t.size());
            bool strict = true;
            for (std::size_t i = 0; i < t.size(); ++i) {
                img[i] = phi.values[t[i]];
                if (i > 0 && img[i] <= img[i - 1])
                    strict = false;
            }
            int p = static_cast<int>(t.size()) - 1;
            f.action.emplace(id, strict ? ChainElement::single(p, tuple_id(img))
                                        : ChainElement(p));
        }
    return f;
}

AdcMorphism oriental_join_iso(const JoinProduct& join_mn) {
    int m = join_mn.left->max_degree;
    int n = join_mn.right->max_degree;
    AdcMorphism f;
    f.source = join_mn.complex;
    f.target = oriental_complex(m + 1 + n);
    for (const auto& [id, xy] : join_mn.factors) {
        std::vector<int> t;
        if (xy.first)
            t = parse_tuple(*xy.first);
        if (xy.second)
            for (int j : parse_tuple(*xy.second))
                t.push_back(m + 1 + j);
        f.action.emplace(id,
                         ChainElement::single(static_cast<int>(t.size()) - 1, tuple_id(t)));
    }
    return f;
}

AdcMorphism aw_diagonal(int n, Side side, int degree_cap) {
    (void)side;
    ComplexPtr K = oriental_complex(n);
    TensorProduct P = tensor_complex(K, K, std::max(degree_cap, 2 * n));
    AdcMorphism f;
    f.source = K;
    f.target = P.complex;
    for (const auto& ids : K->basis)
        for (const Id& id : ids) {
            std::vector<int> t = parse_tuple(id);
            int p = static_cast<int>(t.size()) - 1;
            ChainElement val(p);
            for (int l = 0; l <= p; ++l) {
                std::vector<int> front(t.begin(), t.begin() + l + 1);
                std::vector<int> back(t.begin() + l, t.end());
                val.add_term(tensor_id(tuple_id(front), tuple_id(back)), 1);
            }
            f.action.emplace(id, std::move(val));
        }
    return f;
}

AdcMorphism g_phi(const SimplexMap& phi, Side side, int degree_cap) {
    if (phi.n != 1)
        throw InputError("g_phi expects a map into [1]");
    int n = phi.m;
    ComplexPtr Kn = oriental_complex(n);
    ComplexPtr K1 = oriental_complex(1);

    // Composite route through the diagonal.
    int cap = std::max({degree_cap, 2 * n, n + 1});
    AdcMorphism nabla = aw_diagonal(n, Side::Oplax, cap);
    AdcMorphism cphi = cosimplicial_image(phi);
    TensorProduct nn = tensor_complex(Kn, Kn, cap);
    AdcMorphism composite;
    TensorProduct target;
    if (side == Side::Oplax) {
        target = tensor_complex(K1, Kn, cap);
        composite = compose(tensor_morphism(cphi, identity_morphism(Kn), nn, target), nabla);
    } else {
        target = tensor_complex(Kn, K1, cap);
        composite = compose(tensor_morphism(identity_morphism(Kn), cphi, nn, target), nabla);
    }

    // Closed case table.
    AdcMorphism table;
    table.source = Kn;
    table.target = target.complex;
    for (const auto& ids : Kn->basis)
        for (const Id& id : ids) {
            std::vector<int> t = parse_tuple(id);
            int p = static_cast<int>(t.size()) - 1;
            ChainElement val(p);
            if (side == Side::Oplax) {
                int r = 0;
                for (int v : t)
                    if (phi.values[v] == 0)
                        ++r;
                if (r == 0) {
                    val.add_term(tensor_id("1", id), 1);
                } else if (r == 1) {
                    val.add_term(tensor_id("0", id), 1);
                    if (p >= 1)
                        val.add_term(
                            tensor_id("0.1", tuple_id({t.begin() + 1, t.end()})), 1);
                } else {
                    val.add_term(tensor_id("0", id), 1);
                }
            } else {
                int r1 = 0;
                for (int v : t)
                    if (phi.values[v] == 1)
                        ++r1;
                if (r1 == 0) {
                    val.add_term(tensor_id(id, "0"), 1);
                } else if (r1 == 1) {
                    val.add_term(tensor_id(id, "1"), 1);
                    if (p >= 1)
                        val.add_term(
                            tensor_id(tuple_id({t.begin(), t.end() - 1}), "0.1"), 1);
                } else {
                    val.add_term(tensor_id(id, "1"), 1);
                }
            }
            table.action.emplace(id, std::move(val));
        }

    if (!(composite == table))
        throw InternalError("g_phi composite and case table disagree for phi = " +
                            phi.to_string());
    return composite;
}

RetractStructure vertex_retraction(int m) {
    RetractStructure s;
    s.inclusion = cosimplicial_image(SimplexMap::constant(0, m, m));
    s.retraction = cosimplicial_image(SimplexMap::constant(m, 0, 0));

    ComplexPtr Km = s.inclusion.target;
    Antihomotopy h;
    h.from = identity_morphism(Km);
    h.to = compose(s.inclusion, s.retraction);
    for (const auto& ids : Km->basis)
        for (const Id& id : ids) {
            std::vector<int> t = parse_tuple(id);
            int p = static_cast<int>(t.size()) - 1;
            ChainElement val(p + 1);
            if (t.back() != m) {
                t.push_back(m);
                val.add_term(tuple_id(t), 1);
            }
            h.action.emplace(id, std::move(val));
        }
    s.homotopy = std::move(h);
    s.strong = true;
    s.over_base = true;
    s.square_zero = true;
    return s;
}

namespace {

std::string phi_key(int n, const SimplexMap& phi) {
    return std::to_string(n) + phi.to_string();
}

}  // namespace

UniquenessReport aw_uniqueness_oracle(int n_max, Int coeff_bound) {
    if (n_max > 2)
        throw InputError("uniqueness search bound exceeded (n_max <= 2)");
    UniquenessReport rep;
    rep.n_max = n_max;
    rep.coeff_bound = coeff_bound;

    std::vector<ComplexPtr> orientals;
    std::vector<TensorProduct> targets;  // c(Δ1) (x) c(Δn)
    ComplexPtr K1 = oriental_complex(1);
    for (int n = 0; n <= n_max; ++n) {
        orientals.push_back(oriental_complex(n));
        targets.push_back(tensor_complex(K1, orientals[n]));
    }

    using Family = std::map<std::string, ChainElement>;  // top-tuple values
    std::vector<Family> families{{}};

    // Value of the candidate family on any tuple, via naturality against the
    // face hitting that tuple.
    auto value_on = [&](const Family& fam, int n, const SimplexMap& phi, const Id& tuple) {
        std::vector<int> t = parse_tuple(tuple);
        int p = static_cast<int>(t.size()) - 1;
        SimplexMap psi(p, n, t);
        SimplexMap phipsi = compose(phi, psi);
        ChainElement top_val = fam.at(phi_key(p, phipsi));
        AdcMorphism push =
            tensor_morphism(identity_morphism(K1), cosimplicial_image(psi), targets[p], targets[n]);
        return push.apply(top_val);
    };

    auto q1 = [&](int n, const ChainElement& v) {
        ChainElement out(v.degree());
        for (const auto& [id, c] : v.terms()) {
            const auto& [u, w] = targets[n].factors.at(id);
            if (orientals[n]->degree(w) == 0)
                out.add_term(u, c);
        }
        return out;
    };
    auto q2 = [&](int n, const ChainElement& v) {
        ChainElement out(v.degree());
        for (const auto& [id, c] : v.terms()) {
            const auto& [u, w] = targets[n].factors.at(id);
            if (K1->degree(u) == 0)
                out.add_term(w, c);
        }
        return out;
    };

    ChainElement alternative(1);
    alternative.add_term(tensor_id("1", "0.1"), 1);
    alternative.add_term(tensor_id("0.1", "0"), 1);
    bool alternative_seen = false;
    bool alternative_survived = false;

    for (int n = 0; n <= n_max; ++n) {
        for (const SimplexMap& phi : all_monotone_maps(n, 1)) {
            UniquenessCase uc;
            uc.n = n;
            uc.phi = phi.values;

            Id top = tuple_id([&] {
                std::vector<int> t(n + 1);
                for (int i = 0; i <= n; ++i)
                    t[i] = i;
                return t;
            }());

            bool constant = true;
            for (int i = 0; i <= n; ++i)
                if (phi.values[i] != phi.values[0])
                    constant = false;
            uc.pinned_by_endpoints = constant;

            std::vector<Family> next;
            std::size_t max_local = 0;
            for (const Family& fam : families) {
                // Required boundary of the top value under this family.
                ChainElement required(n - 1 >= 0 ? n - 1 : 0);
                if (n >= 1) {
                    ChainElement dtop = orientals[n]->d(top);
                    for (const auto& [face_id, c] : dtop.terms()) {
                        ChainElement v = value_on(fam, n, phi, face_id);
                        v *= c;
                        required += v;
                    }
                }

                std::vector<ChainElement> locals;
                auto admit = [&](const ChainElement& cand) {
                    if (n >= 1 && targets[n].complex->d(cand) != required)
                        return;
                    if (q1(n, cand) != cosimplicial_image(phi).apply(top))
                        return;
                    if (q2(n, cand) != ChainElement::single(n, top))
                        return;
                    locals.push_back(cand);
                };

                if (constant) {
                    ChainElement cand = ChainElement::single(
                        n, tensor_id(std::to_string(phi.values[0]), top));
                    admit(cand);
                } else {
                    // All positive degree-n values with coefficients <= bound.
                    const std::vector<Id>& slots = targets[n].complex->basis[n];
                    std::vector<Int> coef(slots.size(), 0);
                    std::function<void(std::size_t)> enumerate = [&](std::size_t k) {
                        if (k == slots.size()) {
                            ChainElement cand(n);
                            for (std::size_t i = 0; i < slots.size(); ++i)
                                cand.add_term(slots[i], coef[i]);
                            admit(cand);
                            return;
                        }
                        for (Int c = 0; c <= coeff_bound; ++c) {
                            coef[k] = c;
                            enumerate(k + 1);
                        }
                    };
                    enumerate(0);
                }

                max_local = std::max(max_local, locals.size());
                for (const ChainElement& v : locals) {
                    if (n == 1 && v == alternative)
                        alternative_seen = true;
                    Family extended = fam;
                    extended.emplace(phi_key(n, phi), v);
                    next.push_back(std::move(extended));
                }
            }
            uc.local_candidates = max_local;
            rep.cases.push_back(std::move(uc));
            families = std::move(next);
        }
    }

    rep.surviving_families = families.size();
    rep.unique_and_matches = families.size() == 1;
    if (rep.unique_and_matches) {
        const Family& fam = families.front();
        for (int n = 0; n <= n_max; ++n) {
            std::vector<int> t(n + 1);
            for (int i = 0; i <= n; ++i)
                t[i] = i;
            Id top = tuple_id(t);
            for (const SimplexMap& phi : all_monotone_maps(n, 1)) {
                if (fam.at(phi_key(n, phi)) != g_phi(phi).apply(top))
                    rep.unique_and_matches = false;
                if (n == 1 && fam.at(phi_key(n, phi)) == alternative)
                    alternative_survived = true;
            }
        }
    }
    rep.alternative_rejected = alternative_seen && !alternative_survived;
    return rep;
}

}  // namespace adc
