#include "adc/enumerate.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adc {

namespace {

// One column of the linear system: the boundary (or augmentation) vector of a
// degree-k basis element, in dense form over the coordinates that occur.
struct SolveContext {
    std::vector<Id> slots;                       // degree-k basis
    std::vector<std::vector<Int>> columns;       // per slot, dense coordinate vector
    std::vector<std::string> coords;             // coordinate names (degree k-1 ids or "#e")
    std::vector<std::vector<Int>> pos_tail;      // per suffix, per coord: max positive reach
    std::vector<std::vector<Int>> neg_tail;      // per suffix, per coord: max negative reach
    Int cap = 0;
};

SolveContext build_context(const AdcComplex& K, int k, Int cap) {
    SolveContext ctx;
    ctx.cap = cap;
    ctx.slots = K.basis.at(k);
    std::map<std::string, std::size_t> coord_index;
    std::vector<std::map<std::string, Int>> sparse(ctx.slots.size());
    for (std::size_t s = 0; s < ctx.slots.size(); ++s) {
        if (k >= 1) {
            ChainElement dcol = K.d(ctx.slots[s]);
            for (const auto& [id, c] : dcol.terms()) {
                sparse[s][id] = c;
                coord_index.emplace(id, 0);
            }
        } else {
            Int ev = K.e(ctx.slots[s]);
            if (ev != 0) {
                sparse[s]["#e"] = ev;
                coord_index.emplace("#e", 0);
            }
        }
    }
    for (auto& [name, idx] : coord_index) {
        idx = ctx.coords.size();
        ctx.coords.push_back(name);
    }
    ctx.columns.assign(ctx.slots.size(), std::vector<Int>(ctx.coords.size(), 0));
    for (std::size_t s = 0; s < ctx.slots.size(); ++s)
        for (const auto& [name, c] : sparse[s])
            ctx.columns[s][coord_index.at(name)] = c;

    // Interval reach of every suffix with coefficients up to cap.
    std::size_t n = ctx.slots.size();
    ctx.pos_tail.assign(n + 1, std::vector<Int>(ctx.coords.size(), 0));
    ctx.neg_tail.assign(n + 1, std::vector<Int>(ctx.coords.size(), 0));
    for (std::size_t s = n; s-- > 0;) {
        ctx.pos_tail[s] = ctx.pos_tail[s + 1];
        ctx.neg_tail[s] = ctx.neg_tail[s + 1];
        for (std::size_t c = 0; c < ctx.coords.size(); ++c) {
            Int v = ctx.columns[s][c];
            if (v > 0)
                ctx.pos_tail[s][c] = checked_add(ctx.pos_tail[s][c], checked_mul(v, cap));
            else if (v < 0)
                ctx.neg_tail[s][c] = checked_add(ctx.neg_tail[s][c], checked_mul(-v, cap));
        }
    }
    return ctx;
}

// DFS over coefficient choices; residual holds target minus contributions so
// far.  Reports whether the cap was ever the binding constraint.
void solve_rec(const SolveContext& ctx, std::size_t s, std::vector<Int>& residual,
               std::vector<Int>& coef, std::vector<std::vector<Int>>& out, bool& cap_touched) {
    std::size_t ncoords = ctx.coords.size();
    if (s == ctx.slots.size()) {
        for (std::size_t c = 0; c < ncoords; ++c)
            if (residual[c] != 0)
                return;
        out.push_back(coef);
        for (Int v : coef)
            if (v == ctx.cap)
                cap_touched = true;
        return;
    }
    // Feasibility window for this coefficient from the interval bounds of
    // the remaining suffix.
    Int lo = 0, hi = ctx.cap;
    for (std::size_t c = 0; c < ncoords; ++c) {
        Int col = ctx.columns[s][c];
        Int pos = ctx.pos_tail[s + 1][c];
        Int neg = ctx.neg_tail[s + 1][c];
        // Need: -neg <= residual - coef*col <= pos.
        if (col > 0) {
            Int upper = residual[c] + neg;
            if (upper < 0)
                return;
            hi = std::min(hi, upper / col);
            Int lower = residual[c] - pos;
            if (lower > 0)
                lo = std::max(lo, (lower + col - 1) / col);
        } else if (col < 0) {
            Int mcol = -col;
            Int upper = pos - residual[c];
            if (upper < 0)
                return;
            hi = std::min(hi, upper / mcol);
            Int lower = -neg - residual[c];
            if (lower > 0)
                lo = std::max(lo, (lower + mcol - 1) / mcol);
        } else {
            if (residual[c] > pos || residual[c] < -neg)
                return;
        }
    }
    if (lo > hi)
        return;
    for (Int v = lo; v <= hi; ++v) {
        coef[s] = v;
        if (v != 0)
            for (std::size_t c = 0; c < ncoords; ++c)
                residual[c] = checked_add(residual[c], checked_mul(-v, ctx.columns[s][c]));
        solve_rec(ctx, s + 1, residual, coef, out, cap_touched);
        if (v != 0)
            for (std::size_t c = 0; c < ncoords; ++c)
                residual[c] = checked_add(residual[c], checked_mul(v, ctx.columns[s][c]));
    }
    coef[s] = 0;
}

std::vector<Int> make_residual(const SolveContext& ctx, const ChainElement& w, Int target_e,
                               int k) {
    std::vector<Int> residual(ctx.coords.size(), 0);
    if (k >= 1) {
        std::map<std::string, Int> want;
        for (const auto& [id, c] : w.terms())
            want[id] = c;
        for (std::size_t c = 0; c < ctx.coords.size(); ++c) {
            auto it = want.find(ctx.coords[c]);
            if (it != want.end()) {
                residual[c] = it->second;
                want.erase(it);
            }
        }
        if (!want.empty())
            residual.clear();  // target outside the reachable span: no solutions
    } else {
        for (std::size_t c = 0; c < ctx.coords.size(); ++c)
            if (ctx.coords[c] == "#e")
                residual[c] = target_e;
        if (ctx.coords.empty() && target_e != 0)
            residual.clear();
    }
    return residual;
}

struct SolveCache {
    const AdcComplex* K = nullptr;
    std::map<std::string, std::pair<std::vector<ChainElement>, bool>> memo;
};

std::vector<ChainElement> coeffs_to_elements(const SolveContext& ctx, int k,
                                             const std::vector<std::vector<Int>>& raw) {
    std::vector<ChainElement> out;
    out.reserve(raw.size());
    for (const auto& coef : raw) {
        ChainElement x(k);
        for (std::size_t s = 0; s < ctx.slots.size(); ++s)
            x.add_term(ctx.slots[s], coef[s]);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace

std::vector<ChainElement> solve_boundary_serial(const AdcComplex& K, int k,
                                                const ChainElement& w, Int target_e,
                                                EnumerationBudget& budget) {
    if (budget.coeff_cap < 1)
        throw InputError("coefficient cap must be at least 1");
    if (k < 0)
        return {};
    if (k > K.max_degree) {
        // Only the zero element lives above the top degree.
        bool solves = k >= 1 ? w.is_zero() : target_e == 0;
        return solves ? std::vector<ChainElement>{ChainElement(k)} : std::vector<ChainElement>{};
    }
    SolveContext ctx = build_context(K, k, budget.coeff_cap);
    std::vector<Int> residual = make_residual(ctx, w, target_e, k);
    if (residual.size() != ctx.coords.size())
        return {};
    std::vector<Int> coef(ctx.slots.size(), 0);
    std::vector<std::vector<Int>> raw;
    bool cap_touched = false;
    solve_rec(ctx, 0, residual, coef, raw, cap_touched);
    if (cap_touched)
        budget.complete = false;
    return coeffs_to_elements(ctx, k, raw);
}

namespace {

const std::vector<ChainElement>& solve_cached(SolveCache& cache, const AdcComplex& K, int k,
                                              const ChainElement& w, Int target_e,
                                              EnumerationBudget& budget) {
    std::string key = std::to_string(k) + "|" +
                      (k >= 1 ? w.to_string() : "e" + std::to_string(target_e));
    auto it = cache.memo.find(key);
    if (it == cache.memo.end()) {
        EnumerationBudget local = budget;
        local.complete = true;
        std::vector<ChainElement> sols = solve_boundary_serial(K, k, w, target_e, local);
        it = cache.memo.emplace(key, std::make_pair(std::move(sols), local.complete)).first;
    }
    if (!it->second.second)
        budget.complete = false;
    return it->second.first;
}

}  // namespace

bool is_cell(const AdcComplex& K, const CellTable& t) {
    if (static_cast<int>(t.rows.size()) != t.dimension + 1)
        return false;
    for (int kk = 0; kk <= t.dimension; ++kk)
        for (int eps = 0; eps <= 1; ++eps)
            if (!t.rows[kk][eps].is_positive() ||
                !validate_element(K, t.rows[kk][eps]).ok())
                return false;
    if (t.rows[t.dimension][0] != t.rows[t.dimension][1])
        return false;
    for (int kk = 1; kk <= t.dimension; ++kk) {
        ChainElement want = t.rows[kk - 1][1] - t.rows[kk - 1][0];
        if (K.d(t.rows[kk][0]) != want || K.d(t.rows[kk][1]) != want)
            return false;
    }
    return K.e(t.rows[0][0]) == 1 && K.e(t.rows[0][1]) == 1;
}

namespace {

// Extend a partial table from degree k upward; the degree-(k-1) rows are
// fixed and determine the required boundary.
void cells_rec(const AdcComplex& K, int dim, int k, CellTable& partial,
               EnumerationBudget& budget, SolveCache& cache, std::vector<CellTable>& out) {
    if (k > dim) {
        CellTable done = partial;
        done.augmentation_ok = true;
        out.push_back(std::move(done));
        return;
    }
    ChainElement want = partial.rows[k - 1][1] - partial.rows[k - 1][0];
    const std::vector<ChainElement>& sols = solve_cached(cache, K, k, want, 0, budget);
    if (k == dim) {
        for (const ChainElement& x : sols) {
            partial.rows[k][0] = x;
            partial.rows[k][1] = x;
            cells_rec(K, dim, k + 1, partial, budget, cache, out);
        }
    } else {
        for (std::size_t i0 = 0; i0 < sols.size(); ++i0)
            for (std::size_t i1 = 0; i1 < sols.size(); ++i1) {
                partial.rows[k][0] = sols[i0];
                partial.rows[k][1] = sols[i1];
                cells_rec(K, dim, k + 1, partial, budget, cache, out);
            }
    }
}

void sort_cells(std::vector<CellTable>& cells) {
    std::sort(cells.begin(), cells.end(), [](const CellTable& a, const CellTable& b) {
        return a.to_string() < b.to_string();
    });
}

std::string serialize_action(const AdcMorphism& f) {
    return f.to_string();
}

void sort_morphisms(std::vector<AdcMorphism>& fs) {
    std::sort(fs.begin(), fs.end(), [](const AdcMorphism& a, const AdcMorphism& b) {
        return serialize_action(a) < serialize_action(b);
    });
}

}  // namespace

std::vector<CellTable> enumerate_cells_serial(const AdcComplex& K, int dim,
                                              EnumerationBudget& budget) {
    if (dim < 0)
        throw InputError("cell dimension must be non-negative");
    std::vector<CellTable> out;
    std::vector<ChainElement> bottoms =
        solve_boundary_serial(K, 0, ChainElement(0), 1, budget);
    CellTable partial;
    partial.dimension = dim;
    partial.rows.assign(dim + 1, {ChainElement(0), ChainElement(0)});
    if (dim == 0) {
        for (const ChainElement& x : bottoms) {
            partial.rows[0][0] = x;
            partial.rows[0][1] = x;
            partial.augmentation_ok = true;
            out.push_back(partial);
        }
    } else {
        SolveCache cache;
        for (const ChainElement& x0 : bottoms)
            for (const ChainElement& x1 : bottoms) {
                partial.rows[0][0] = x0;
                partial.rows[0][1] = x1;
                cells_rec(K, dim, 1, partial, budget, cache, out);
            }
    }
    sort_cells(out);
    return out;
}

std::vector<CellTable> enumerate_cells(const AdcComplex& K, int dim, EnumerationBudget& budget,
                                       int jobs) {
#ifdef _OPENMP
    if (jobs > 1 && dim >= 1) {
        std::vector<ChainElement> bottoms =
            solve_boundary_serial(K, 0, ChainElement(0), 1, budget);
        std::vector<std::pair<ChainElement, ChainElement>> roots;
        for (const ChainElement& x0 : bottoms)
            for (const ChainElement& x1 : bottoms)
                roots.emplace_back(x0, x1);
        std::vector<std::vector<CellTable>> parts(roots.size());
        std::vector<char> incomplete(roots.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (std::size_t r = 0; r < roots.size(); ++r) {
            EnumerationBudget local = budget;
            local.complete = true;
            SolveCache cache;
            CellTable partial;
            partial.dimension = dim;
            partial.rows.assign(dim + 1, {ChainElement(0), ChainElement(0)});
            partial.rows[0][0] = roots[r].first;
            partial.rows[0][1] = roots[r].second;
            cells_rec(K, dim, 1, partial, local, cache, parts[r]);
            incomplete[r] = !local.complete;
        }
        std::vector<CellTable> out;
        for (std::size_t r = 0; r < roots.size(); ++r) {
            if (incomplete[r])
                budget.complete = false;
            out.insert(out.end(), parts[r].begin(), parts[r].end());
        }
        sort_cells(out);
        return out;
    }
#else
    (void)jobs;
#endif
    return enumerate_cells_serial(K, dim, budget);
}

namespace {

struct MorphismOrder {
    std::vector<Id> order;  // source basis by degree, then basis position
};

MorphismOrder morphism_order(const AdcComplex& K) {
    MorphismOrder mo;
    for (const auto& ids : K.basis)
        for (const Id& id : ids)
            mo.order.push_back(id);
    return mo;
}

void morphisms_rec(ComplexPtr K, ComplexPtr L, const MorphismOrder& mo, std::size_t s,
                   AdcMorphism& partial, const MorphismConstraint& constraint,
                   EnumerationBudget& budget, SolveCache& cache,
                   std::vector<AdcMorphism>& out) {
    if (s == mo.order.size()) {
        out.push_back(partial);
        return;
    }
    const Id& x = mo.order[s];
    int k = K->degree(x);
    ChainElement want(k >= 1 ? k - 1 : 0);
    if (k >= 1)
        want = partial.apply(K->d(x));
    auto pinned = constraint.find(x);
    if (pinned != constraint.end()) {
        const ChainElement& v = pinned->second;
        if (!v.is_positive() || !validate_element(*L, v).ok() ||
            (!v.is_zero() && v.degree() != k))
            throw InputError("inconsistent constraint value on " + x);
        bool fits = k >= 1 ? (L->d(v) == want) : (L->e(v) == K->e(x));
        if (fits) {
            partial.action[x] = v;
            morphisms_rec(K, L, mo, s + 1, partial, constraint, budget, cache, out);
            partial.action.erase(x);
        }
        return;
    }
    const std::vector<ChainElement>& sols =
        solve_cached(cache, *L, k, want, k == 0 ? K->e(x) : 0, budget);
    for (const ChainElement& v : sols) {
        partial.action[x] = v;
        morphisms_rec(K, L, mo, s + 1, partial, constraint, budget, cache, out);
    }
    partial.action.erase(x);
}

}  // namespace

std::vector<AdcMorphism> enumerate_morphisms_serial(ComplexPtr K, ComplexPtr L,
                                                    EnumerationBudget& budget,
                                                    const MorphismConstraint& constraint) {
    for (const auto& [id, v] : constraint)
        if (!K->has(id))
            throw InputError("constraint pins unknown basis element " + id);
    MorphismOrder mo = morphism_order(*K);
    AdcMorphism partial;
    partial.source = K;
    partial.target = L;
    std::vector<AdcMorphism> out;
    SolveCache cache;
    morphisms_rec(K, L, mo, 0, partial, constraint, budget, cache, out);
    sort_morphisms(out);
    return out;
}

std::vector<AdcMorphism> enumerate_morphisms(ComplexPtr K, ComplexPtr L,
                                             EnumerationBudget& budget,
                                             const MorphismConstraint& constraint, int jobs) {
    for (const auto& [id, v] : constraint)
        if (!K->has(id))
            throw InputError("constraint pins unknown basis element " + id);
#ifdef _OPENMP
    if (jobs > 1 && !K->basis.empty() && !K->basis[0].empty()) {
        MorphismOrder mo = morphism_order(*K);
        // Split on the first unpinned slot's candidate values.
        const Id& x0 = mo.order.front();
        int k0 = K->degree(x0);
        std::vector<ChainElement> first;
        auto pinned = constraint.find(x0);
        if (pinned != constraint.end()) {
            const ChainElement& v = pinned->second;
            if (!v.is_positive() || !validate_element(*L, v).ok() ||
                (!v.is_zero() && v.degree() != k0))
                throw InputError("inconsistent constraint value on " + x0);
            if (L->e(v) == K->e(x0))
                first.push_back(v);
        } else {
            first = solve_boundary_serial(*L, k0, ChainElement(0),
                                          k0 == 0 ? K->e(x0) : 0, budget);
        }
        std::vector<std::vector<AdcMorphism>> parts(first.size());
        std::vector<char> incomplete(first.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (std::size_t r = 0; r < first.size(); ++r) {
            EnumerationBudget local = budget;
            local.complete = true;
            SolveCache cache;
            AdcMorphism partial;
            partial.source = K;
            partial.target = L;
            partial.action[x0] = first[r];
            morphisms_rec(K, L, mo, 1, partial, constraint, local, cache, parts[r]);
            incomplete[r] = !local.complete;
        }
        std::vector<AdcMorphism> out;
        for (std::size_t r = 0; r < first.size(); ++r) {
            if (incomplete[r])
                budget.complete = false;
            out.insert(out.end(), parts[r].begin(), parts[r].end());
        }
        sort_morphisms(out);
        return out;
    }
#else
    (void)jobs;
#endif
    return enumerate_morphisms_serial(K, L, budget, constraint);
}

int Nerve::index_of(int level, const AdcMorphism& f) const {
    const auto& level_keys = keys.at(level);
    std::string key = f.to_string();
    auto it = std::lower_bound(level_keys.begin(), level_keys.end(), key);
    if (it == level_keys.end() || *it != key)
        throw InternalError("simplex not present in the materialized nerve");
    return static_cast<int>(it - level_keys.begin());
}

Nerve nerve(ComplexPtr K, int trunc, EnumerationBudget budget, int jobs) {
    Nerve N;
    N.K = K;
    N.trunc = trunc;
    N.budget = budget;
    N.simplices.resize(trunc + 1);
    N.keys.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        N.simplices[n] = enumerate_morphisms(oriental_complex(n), K, N.budget, {}, jobs);
        for (const AdcMorphism& f : N.simplices[n])
            N.keys[n].push_back(f.to_string());
    }

    N.sset.cap = trunc;
    N.sset.labels.resize(trunc + 1);
    N.sset.face.resize(trunc + 1);
    N.sset.degen.resize(std::max(trunc, 0));
    for (int n = 0; n <= trunc; ++n)
        for (std::size_t i = 0; i < N.simplices[n].size(); ++i)
            N.sset.labels[n].push_back("s" + std::to_string(n) + "_" + std::to_string(i));
    for (int n = 1; n <= trunc; ++n) {
        N.sset.face[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            AdcMorphism delta = cosimplicial_image(SimplexMap::face(n, i));
            for (const AdcMorphism& f : N.simplices[n])
                N.sset.face[n][i].push_back(N.index_of(n - 1, compose(f, delta)));
        }
    }
    for (int n = 0; n < trunc; ++n) {
        N.sset.degen[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            AdcMorphism sigma = cosimplicial_image(SimplexMap::degeneracy(n, i));
            for (const AdcMorphism& f : N.simplices[n])
                N.sset.degen[n][i].push_back(N.index_of(n + 1, compose(f, sigma)));
        }
    }
    return N;
}

}  // namespace adc
