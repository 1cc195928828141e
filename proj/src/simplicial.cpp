#include "adc/simplicial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace adc {

int TruncatedSimplicialSet::apply(const SimplexMap& f, int idx) const {
    if (f.n > cap || f.m > cap)
        throw InputError("simplicial operator leaves the truncation range");
    // Peel one face or one degeneracy per step.
    if (f.m == f.n && f.is_identity())
        return idx;
    // Non-injective: factor through a degeneracy at the first repeat.
    for (int j = 0; j + 1 <= f.m; ++j)
        if (f.values[j] == f.values[j + 1]) {
            std::vector<int> rest(f.values);
            rest.erase(rest.begin() + j);
            SimplexMap inner(f.m - 1, f.n, std::move(rest));
            return degen.at(f.m - 1).at(j).at(apply(inner, idx));
        }
    // Injective, not surjective: peel the largest missing value.
    std::vector<char> hit(f.n + 1, 0);
    for (int v : f.values)
        hit[v] = 1;
    for (int j = f.n; j >= 0; --j)
        if (!hit[j]) {
            std::vector<int> rest(f.values);
            for (int& v : rest)
                if (v > j)
                    --v;
            SimplexMap inner(f.m, f.n - 1, std::move(rest));
            return apply(inner, face.at(f.n).at(j).at(idx));
        }
    throw InternalError("unreachable simplex-map factorization");
}

bool TruncatedSimplicialSet::is_degenerate(int level, int idx) const {
    if (level == 0)
        return false;
    for (int j = 0; j <= level - 1; ++j)
        for (std::size_t y = 0; y < size(level - 1); ++y)
            if (degen.at(level - 1).at(j).at(y) == idx)
                return true;
    return false;
}

namespace {

bool shape_ok(const TruncatedSimplicialSet& X, ValidationReport& rep) {
    if (static_cast<int>(X.labels.size()) != X.cap + 1) {
        rep.add(Issue::Kind::Input, "bad-shape", "labels must hold cap+1 levels");
        return false;
    }
    if (static_cast<int>(X.face.size()) != X.cap + 1 ||
        static_cast<int>(X.degen.size()) != std::max(X.cap, 0)) {
        rep.add(Issue::Kind::Input, "bad-shape", "operator tables have wrong shape");
        return false;
    }
    for (int n = 1; n <= X.cap; ++n) {
        if (static_cast<int>(X.face[n].size()) != n + 1) {
            rep.add(Issue::Kind::Input, "bad-shape",
                    "level " + std::to_string(n) + " needs n+1 face operators");
            return false;
        }
        for (int i = 0; i <= n; ++i) {
            if (X.face[n][i].size() != X.size(n)) {
                rep.add(Issue::Kind::Input, "bad-shape", "face table size mismatch");
                return false;
            }
            for (int v : X.face[n][i])
                if (v < 0 || v >= static_cast<int>(X.size(n - 1))) {
                    rep.add(Issue::Kind::Input, "bad-shape", "face index out of range");
                    return false;
                }
        }
    }
    for (int n = 0; n < X.cap; ++n) {
        if (static_cast<int>(X.degen[n].size()) != n + 1) {
            rep.add(Issue::Kind::Input, "bad-shape",
                    "level " + std::to_string(n) + " needs n+1 degeneracies");
            return false;
        }
        for (int i = 0; i <= n; ++i) {
            if (X.degen[n][i].size() != X.size(n)) {
                rep.add(Issue::Kind::Input, "bad-shape", "degeneracy table size mismatch");
                return false;
            }
            for (int v : X.degen[n][i])
                if (v < 0 || v >= static_cast<int>(X.size(n + 1))) {
                    rep.add(Issue::Kind::Input, "bad-shape", "degeneracy index out of range");
                    return false;
                }
        }
    }
    return true;
}

}  // namespace

ValidationReport validate_simplicial(const TruncatedSimplicialSet& X) {
    ValidationReport rep;
    if (!shape_ok(X, rep))
        return rep;

    auto mismatch = [&](const std::string& which, int n, int i, int j, std::size_t x) {
        rep.add(Issue::Kind::Algebra, which,
                which + " fails at level " + std::to_string(n) + ", (i,j)=(" +
                    std::to_string(i) + "," + std::to_string(j) + "), simplex " +
                    X.labels[n][x],
                X.labels[n][x]);
    };

    // d_i d_j = d_{j-1} d_i, i < j
    for (int n = 2; n <= X.cap; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (std::size_t x = 0; x < X.size(n); ++x)
                    if (X.d(n - 1, i, X.d(n, j, x)) != X.d(n - 1, j - 1, X.d(n, i, x)))
                        mismatch("face-face", n, i, j, x);
    // s_i s_j = s_{j+1} s_i, i <= j
    for (int n = 0; n + 2 <= X.cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (std::size_t x = 0; x < X.size(n); ++x)
                    if (X.s(n + 1, i, X.s(n, j, x)) != X.s(n + 1, j + 1, X.s(n, i, x)))
                        mismatch("degen-degen", n, i, j, x);
    // mixed identities
    for (int n = 0; n + 1 <= X.cap; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (std::size_t x = 0; x < X.size(n); ++x) {
                    int sj = X.s(n, j, x);
                    int got = X.d(n + 1, i, sj);
                    int expected;
                    if (i < j)
                        expected = n >= 1 ? X.s(n - 1, j - 1, X.d(n, i, x)) : -1;
                    else if (i == j || i == j + 1)
                        expected = static_cast<int>(x);
                    else
                        expected = n >= 1 ? X.s(n - 1, j, X.d(n, i - 1, x)) : -1;
                    if (expected >= 0 && got != expected)
                        mismatch("face-degen", n, i, j, x);
                }
    return rep;
}

ValidationReport validate_simplicial_map(const SimplicialMap& f) {
    ValidationReport rep;
    const auto& X = *f.source;
    const auto& Y = *f.target;
    int cap = f.cap();
    if (cap > X.cap || cap > Y.cap) {
        rep.add(Issue::Kind::Input, "bad-shape", "map cap exceeds source or target cap");
        return rep;
    }
    for (int n = 0; n <= cap; ++n) {
        if (f.level_map[n].size() != X.size(n)) {
            rep.add(Issue::Kind::Input, "bad-shape",
                    "level " + std::to_string(n) + " map has wrong size");
            return rep;
        }
        for (int v : f.level_map[n])
            if (v < 0 || v >= static_cast<int>(Y.size(n))) {
                rep.add(Issue::Kind::Input, "bad-shape", "map value out of range");
                return rep;
            }
    }
    for (int n = 1; n <= cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t x = 0; x < X.size(n); ++x)
                if (f.apply(n - 1, X.d(n, i, x)) != Y.d(n, i, f.apply(n, x)))
                    rep.add(Issue::Kind::Algebra, "face-commutation",
                            "map does not commute with d_" + std::to_string(i) +
                                " at level " + std::to_string(n) + " on " + X.labels[n][x]);
    for (int n = 0; n + 1 <= cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t x = 0; x < X.size(n); ++x)
                if (f.apply(n + 1, X.s(n, i, x)) != Y.s(n, i, f.apply(n, x)))
                    rep.add(Issue::Kind::Algebra, "degen-commutation",
                            "map does not commute with s_" + std::to_string(i) +
                                " at level " + std::to_string(n) + " on " + X.labels[n][x]);
    return rep;
}

SimplicialMap identity_map(const TruncatedSimplicialSet& X) {
    SimplicialMap f;
    f.source = &X;
    f.target = &X;
    f.level_map.resize(X.cap + 1);
    for (int n = 0; n <= X.cap; ++n) {
        f.level_map[n].resize(X.size(n));
        std::iota(f.level_map[n].begin(), f.level_map[n].end(), 0);
    }
    return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (f.target != g.source)
        throw InputError("simplicial maps do not compose");
    SimplicialMap out;
    out.source = f.source;
    out.target = g.target;
    int cap = std::min(f.cap(), g.cap());
    out.level_map.resize(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        out.level_map[n].resize(f.level_map[n].size());
        for (std::size_t x = 0; x < f.level_map[n].size(); ++x)
            out.level_map[n][x] = g.apply(n, f.apply(n, x));
    }
    return out;
}

TruncatedSimplicialSet std_simplex(int m, int cap) {
    TruncatedSimplicialSet X;
    X.cap = cap;
    X.labels.resize(cap + 1);
    X.face.resize(cap + 1);
    X.degen.resize(std::max(cap, 0));

    std::vector<std::vector<SimplexMap>> maps(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        maps[n] = all_monotone_maps(n, m);
        for (const auto& f : maps[n])
            X.labels[n].push_back(f.to_string());
    }
    auto index_at = [&](int n, const SimplexMap& f) {
        for (std::size_t i = 0; i < maps[n].size(); ++i)
            if (maps[n][i].values == f.values)
                return static_cast<int>(i);
        throw InternalError("monotone map not found");
    };
    for (int n = 1; n <= cap; ++n) {
        X.face[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            for (const auto& f : maps[n])
                X.face[n][i].push_back(index_at(n - 1, compose(f, SimplexMap::face(n, i))));
    }
    for (int n = 0; n < cap; ++n) {
        X.degen[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            for (const auto& f : maps[n])
                X.degen[n][i].push_back(index_at(n + 1, compose(f, SimplexMap::degeneracy(n, i))));
    }
    return X;
}

int std_simplex_index(int m, const SimplexMap& f) {
    auto maps = all_monotone_maps(f.m, m);
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (maps[i].values == f.values)
            return static_cast<int>(i);
    throw InputError("map is not a simplex of the standard simplex");
}

SimplexMap std_simplex_map_at(int m, int level, int idx) {
    auto maps = all_monotone_maps(level, m);
    return maps.at(idx);
}

TruncatedSimplicialSet op_dual(const TruncatedSimplicialSet& X) {
    TruncatedSimplicialSet Y = X;
    for (int n = 1; n <= X.cap; ++n)
        for (int i = 0; i <= n; ++i)
            Y.face[n][i] = X.face[n][n - i];
    for (int n = 0; n < X.cap; ++n)
        for (int i = 0; i <= n; ++i)
            Y.degen[n][i] = X.degen[n][n - i];
    return Y;
}

int Product::index_of(int level, int a, int b) const {
    const auto& ps = pairs.at(level);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i].first == a && ps[i].second == b)
            return static_cast<int>(i);
    throw InternalError("pair not found in product");
}

Product product(const TruncatedSimplicialSet& A, const TruncatedSimplicialSet& B) {
    Product P;
    int cap = std::min(A.cap, B.cap);
    P.sset.cap = cap;
    P.sset.labels.resize(cap + 1);
    P.sset.face.resize(cap + 1);
    P.sset.degen.resize(std::max(cap, 0));
    P.pairs.resize(cap + 1);
    for (int n = 0; n <= cap; ++n)
        for (std::size_t a = 0; a < A.size(n); ++a)
            for (std::size_t b = 0; b < B.size(n); ++b) {
                P.pairs[n].emplace_back(static_cast<int>(a), static_cast<int>(b));
                P.sset.labels[n].push_back(A.labels[n][a] + "x" + B.labels[n][b]);
            }
    for (int n = 1; n <= cap; ++n) {
        P.sset.face[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            for (const auto& [a, b] : P.pairs[n])
                P.sset.face[n][i].push_back(P.index_of(n - 1, A.d(n, i, a), B.d(n, i, b)));
    }
    for (int n = 0; n < cap; ++n) {
        P.sset.degen[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            for (const auto& [a, b] : P.pairs[n])
                P.sset.degen[n][i].push_back(P.index_of(n + 1, A.s(n, i, a), B.s(n, i, b)));
    }
    return P;
}

Product product_with_interval(const TruncatedSimplicialSet& X) {
    static thread_local std::map<int, TruncatedSimplicialSet> interval_cache;
    auto it = interval_cache.find(X.cap);
    if (it == interval_cache.end())
        it = interval_cache.emplace(X.cap, std_simplex(1, X.cap)).first;
    return product(it->second, X);
}

Product pullback(const SimplicialMap& f, const SimplicialMap& g) {
    const auto& X = *f.source;
    const auto& Y = *g.source;
    Product P;
    int cap = std::min(f.cap(), g.cap());
    P.sset.cap = cap;
    P.sset.labels.resize(cap + 1);
    P.sset.face.resize(cap + 1);
    P.sset.degen.resize(std::max(cap, 0));
    P.pairs.resize(cap + 1);
    for (int n = 0; n <= cap; ++n)
        for (std::size_t a = 0; a < X.size(n); ++a)
            for (std::size_t b = 0; b < Y.size(n); ++b)
                if (f.apply(n, static_cast<int>(a)) == g.apply(n, static_cast<int>(b))) {
                    P.pairs[n].emplace_back(static_cast<int>(a), static_cast<int>(b));
                    P.sset.labels[n].push_back(X.labels[n][a] + "x" + Y.labels[n][b]);
                }
    for (int n = 1; n <= cap; ++n) {
        P.sset.face[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            for (const auto& [a, b] : P.pairs[n])
                P.sset.face[n][i].push_back(P.index_of(n - 1, X.d(n, i, a), Y.d(n, i, b)));
    }
    for (int n = 0; n < cap; ++n) {
        P.sset.degen[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            for (const auto& [a, b] : P.pairs[n])
                P.sset.degen[n][i].push_back(P.index_of(n + 1, X.s(n, i, a), Y.s(n, i, b)));
    }
    return P;
}

TruncatedSimplicialSet bisimplicial_row(const BisimplicialSet& B, int n) {
    TruncatedSimplicialSet X;
    X.cap = B.cap_h;
    X.labels.resize(X.cap + 1);
    X.face.resize(X.cap + 1);
    X.degen.resize(std::max(X.cap, 0));
    for (int m = 0; m <= B.cap_h; ++m) {
        X.labels[m] = B.labels[m][n];
        if (m >= 1)
            X.face[m] = B.face_h[m][n];
        if (m < B.cap_h)
            X.degen[m] = B.degen_h[m][n];
    }
    return X;
}

TruncatedSimplicialSet bisimplicial_column(const BisimplicialSet& B, int m) {
    TruncatedSimplicialSet X;
    X.cap = B.cap_v;
    X.labels.resize(X.cap + 1);
    X.face.resize(X.cap + 1);
    X.degen.resize(std::max(X.cap, 0));
    for (int n = 0; n <= B.cap_v; ++n) {
        X.labels[n] = B.labels[m][n];
        if (n >= 1)
            X.face[n] = B.face_v[m][n];
        if (n < B.cap_v)
            X.degen[n] = B.degen_v[m][n];
    }
    return X;
}

ValidationReport validate_bisimplicial(const BisimplicialSet& B) {
    ValidationReport rep;
    // Rows and columns are simplicial sets in their own right.
    for (int n = 0; n <= B.cap_v; ++n) {
        ValidationReport r = validate_simplicial(bisimplicial_row(B, n));
        for (auto& issue : r.issues)
            rep.issues.push_back(issue);
    }
    for (int m = 0; m <= B.cap_h; ++m) {
        ValidationReport r = validate_simplicial(bisimplicial_column(B, m));
        for (auto& issue : r.issues)
            rep.issues.push_back(issue);
    }
    auto label = [&](int m, int n, std::size_t x) { return B.labels[m][n][x]; };
    // The two operator families commute.
    for (int m = 0; m <= B.cap_h; ++m)
        for (int n = 0; n <= B.cap_v; ++n)
            for (std::size_t x = 0; x < B.labels[m][n].size(); ++x) {
                for (int i = 0; m >= 1 && i <= m; ++i)
                    for (int j = 0; n >= 1 && j <= n; ++j)
                        if (B.face_v[m - 1][n][j][B.face_h[m][n][i][x]] !=
                            B.face_h[m][n - 1][i][B.face_v[m][n][j][x]])
                            rep.add(Issue::Kind::Algebra, "hv-face-face",
                                    "faces do not commute on " + label(m, n, x));
                for (int i = 0; m < B.cap_h && i <= m; ++i)
                    for (int j = 0; n < B.cap_v && j <= n; ++j)
                        if (B.degen_v[m + 1][n][j][B.degen_h[m][n][i][x]] !=
                            B.degen_h[m][n + 1][i][B.degen_v[m][n][j][x]])
                            rep.add(Issue::Kind::Algebra, "hv-degen-degen",
                                    "degeneracies do not commute on " + label(m, n, x));
                for (int i = 0; m >= 1 && i <= m; ++i)
                    for (int j = 0; n < B.cap_v && j <= n; ++j)
                        if (B.degen_v[m - 1][n][j][B.face_h[m][n][i][x]] !=
                            B.face_h[m][n + 1][i][B.degen_v[m][n][j][x]])
                            rep.add(Issue::Kind::Algebra, "hv-face-degen",
                                    "mixed operators do not commute on " + label(m, n, x));
            }
    return rep;
}

TruncatedSimplicialSet diagonal(const BisimplicialSet& B) {
    TruncatedSimplicialSet X;
    X.cap = std::min(B.cap_h, B.cap_v);
    X.labels.resize(X.cap + 1);
    X.face.resize(X.cap + 1);
    X.degen.resize(std::max(X.cap, 0));
    for (int n = 0; n <= X.cap; ++n)
        X.labels[n] = B.labels[n][n];
    for (int n = 1; n <= X.cap; ++n) {
        X.face[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            for (std::size_t x = 0; x < X.labels[n].size(); ++x)
                X.face[n][i].push_back(B.face_h[n][n - 1][i][B.face_v[n][n][i][x]]);
    }
    for (int n = 0; n < X.cap; ++n) {
        X.degen[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            for (std::size_t x = 0; x < X.labels[n].size(); ++x)
                X.degen[n][i].push_back(B.degen_h[n][n + 1][i][B.degen_v[n][n][i][x]]);
    }
    return X;
}

namespace {

SimplexMap front_block(int m, int total) {
    std::vector<int> v(m + 1);
    std::iota(v.begin(), v.end(), 0);
    return SimplexMap(m, total, std::move(v));
}

SimplexMap back_block(int n, int offset, int total) {
    std::vector<int> v(n + 1);
    std::iota(v.begin(), v.end(), offset);
    return SimplexMap(n, total, std::move(v));
}

}  // namespace

Comma comma_bisimplicial(const SimplicialMap& g, const SimplicialMap& h, int cap_h, int cap_v) {
    const auto& X = *g.source;
    const auto& Y = *h.source;
    const auto& Z = *g.target;
    if (h.target != g.target)
        throw InputError("comma legs have different targets");
    if (X.cap < cap_h || Y.cap < cap_v || Z.cap < cap_h + 1 + cap_v ||
        g.cap() < cap_h || h.cap() < cap_v)
        throw InputError("truncation too small for the requested comma caps");

    Comma C;
    C.bis.cap_h = cap_h;
    C.bis.cap_v = cap_v;
    auto resize4 = [&](auto& tab) {
        tab.resize(cap_h + 1);
        for (auto& row : tab)
            row.resize(cap_v + 1);
    };
    resize4(C.bis.labels);
    resize4(C.triples);
    resize4(C.bis.face_h);
    resize4(C.bis.face_v);
    resize4(C.bis.degen_h);
    resize4(C.bis.degen_v);

    for (int m = 0; m <= cap_h; ++m)
        for (int n = 0; n <= cap_v; ++n) {
            int total = m + 1 + n;
            for (std::size_t z = 0; z < Z.size(total); ++z) {
                int zf = Z.apply(front_block(m, total), static_cast<int>(z));
                int zb = Z.apply(back_block(n, m + 1, total), static_cast<int>(z));
                for (std::size_t x = 0; x < X.size(m); ++x) {
                    if (g.apply(m, static_cast<int>(x)) != zf)
                        continue;
                    for (std::size_t y = 0; y < Y.size(n); ++y) {
                        if (h.apply(n, static_cast<int>(y)) != zb)
                            continue;
                        C.triples[m][n].push_back(
                            {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)});
                        C.bis.labels[m][n].push_back(X.labels[m][x] + "|" + Y.labels[n][y] +
                                                     "|" + Z.labels[total][z]);
                    }
                }
            }
        }

    auto locate = [&](int m, int n, int x, int y, int z) {
        const auto& ts = C.triples[m][n];
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (ts[i][0] == x && ts[i][1] == y && ts[i][2] == z)
                return static_cast<int>(i);
        throw InternalError("comma operator left the comma object");
    };

    for (int m = 0; m <= cap_h; ++m)
        for (int n = 0; n <= cap_v; ++n) {
            int total = m + 1 + n;
            if (m >= 1) {
                C.bis.face_h[m][n].resize(m + 1);
                for (int i = 0; i <= m; ++i)
                    for (const auto& t : C.triples[m][n])
                        C.bis.face_h[m][n][i].push_back(
                            locate(m - 1, n, X.d(m, i, t[0]), t[1],
                                   Z.apply(SimplexMap::face(total, i), t[2])));
            }
            if (n >= 1) {
                C.bis.face_v[m][n].resize(n + 1);
                for (int i = 0; i <= n; ++i)
                    for (const auto& t : C.triples[m][n])
                        C.bis.face_v[m][n][i].push_back(
                            locate(m, n - 1, t[0], Y.d(n, i, t[1]),
                                   Z.apply(SimplexMap::face(total, m + 1 + i), t[2])));
            }
            if (m < cap_h) {
                C.bis.degen_h[m][n].resize(m + 1);
                for (int i = 0; i <= m; ++i)
                    for (const auto& t : C.triples[m][n])
                        C.bis.degen_h[m][n][i].push_back(
                            locate(m + 1, n, X.s(m, i, t[0]), t[1],
                                   Z.apply(SimplexMap::degeneracy(total, i), t[2])));
            }
            if (n < cap_v) {
                C.bis.degen_v[m][n].resize(n + 1);
                for (int i = 0; i <= n; ++i)
                    for (const auto& t : C.triples[m][n])
                        C.bis.degen_v[m][n][i].push_back(
                            locate(m, n + 1, t[0], Y.s(n, i, t[1]),
                                   Z.apply(SimplexMap::degeneracy(total, m + 1 + i), t[2])));
            }
        }
    return C;
}

int Slice::index_of(int level, int x, int zp) const {
    const auto& ps = pairs.at(level);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i].first == x && ps[i].second == zp)
            return static_cast<int>(i);
    throw InternalError("pair not found in slice");
}

Slice slice_under(const SimplicialMap& g, int m, int z_index, int cap) {
    const auto& X = *g.source;
    const auto& Z = *g.target;
    if (Z.cap < m + 1 + cap || X.cap < cap || g.cap() < cap)
        throw InputError("truncation too small for the requested slice");

    Slice S;
    S.sset.cap = cap;
    S.sset.labels.resize(cap + 1);
    S.sset.face.resize(cap + 1);
    S.sset.degen.resize(std::max(cap, 0));
    S.pairs.resize(cap + 1);

    for (int n = 0; n <= cap; ++n) {
        int total = m + 1 + n;
        for (std::size_t z = 0; z < Z.size(total); ++z) {
            if (Z.apply(front_block(m, total), static_cast<int>(z)) != z_index)
                continue;
            int zb = Z.apply(back_block(n, m + 1, total), static_cast<int>(z));
            for (std::size_t x = 0; x < X.size(n); ++x)
                if (g.apply(n, static_cast<int>(x)) == zb) {
                    S.pairs[n].emplace_back(static_cast<int>(x), static_cast<int>(z));
                    S.sset.labels[n].push_back(X.labels[n][x] + "|" + Z.labels[total][z]);
                }
        }
    }
    for (int n = 1; n <= cap; ++n) {
        S.sset.face[n].resize(n + 1);
        int total = m + 1 + n;
        for (int i = 0; i <= n; ++i)
            for (const auto& [x, z] : S.pairs[n])
                S.sset.face[n][i].push_back(S.index_of(
                    n - 1, X.d(n, i, x), Z.apply(SimplexMap::face(total, m + 1 + i), z)));
    }
    for (int n = 0; n < cap; ++n) {
        S.sset.degen[n].resize(n + 1);
        int total = m + 1 + n;
        for (int i = 0; i <= n; ++i)
            for (const auto& [x, z] : S.pairs[n])
                S.sset.degen[n][i].push_back(S.index_of(
                    n + 1, X.s(n, i, x), Z.apply(SimplexMap::degeneracy(total, m + 1 + i), z)));
    }
    S.to_X.source = &S.sset;
    S.to_X.target = g.source;
    S.to_X.level_map.resize(cap + 1);
    for (int n = 0; n <= cap; ++n)
        for (const auto& [x, z] : S.pairs[n])
            S.to_X.level_map[n].push_back(x);
    return S;
}

SimplicialMap slice_map(const Slice& src, const Slice& dst, const SimplicialMap& f) {
    SimplicialMap out;
    out.source = &src.sset;
    out.target = &dst.sset;
    int cap = src.sset.cap;
    out.level_map.resize(cap + 1);
    for (int n = 0; n <= cap; ++n)
        for (const auto& [x, z] : src.pairs[n])
            out.level_map[n].push_back(dst.index_of(n, f.apply(n, x), z));
    return out;
}

Slice slice_over(const SimplicialMap& g, int n, int z_index, int cap) {
    const auto& X = *g.source;
    const auto& Z = *g.target;
    if (Z.cap < cap + 1 + n || X.cap < cap || g.cap() < cap)
        throw InputError("truncation too small for the requested slice");

    Slice S;
    S.sset.cap = cap;
    S.sset.labels.resize(cap + 1);
    S.sset.face.resize(cap + 1);
    S.sset.degen.resize(std::max(cap, 0));
    S.pairs.resize(cap + 1);

    for (int k = 0; k <= cap; ++k) {
        int total = k + 1 + n;
        for (std::size_t z = 0; z < Z.size(total); ++z) {
            if (Z.apply(back_block(n, k + 1, total), static_cast<int>(z)) != z_index)
                continue;
            int zf = Z.apply(front_block(k, total), static_cast<int>(z));
            for (std::size_t x = 0; x < X.size(k); ++x)
                if (g.apply(k, static_cast<int>(x)) == zf) {
                    S.pairs[k].emplace_back(static_cast<int>(x), static_cast<int>(z));
                    S.sset.labels[k].push_back(X.labels[k][x] + "|" + Z.labels[total][z]);
                }
        }
    }
    for (int k = 1; k <= cap; ++k) {
        S.sset.face[k].resize(k + 1);
        int total = k + 1 + n;
        for (int i = 0; i <= k; ++i)
            for (const auto& [x, z] : S.pairs[k])
                S.sset.face[k][i].push_back(
                    S.index_of(k - 1, X.d(k, i, x), Z.apply(SimplexMap::face(total, i), z)));
    }
    for (int k = 0; k < cap; ++k) {
        S.sset.degen[k].resize(k + 1);
        int total = k + 1 + n;
        for (int i = 0; i <= k; ++i)
            for (const auto& [x, z] : S.pairs[k])
                S.sset.degen[k][i].push_back(S.index_of(
                    k + 1, X.s(k, i, x), Z.apply(SimplexMap::degeneracy(total, i), z)));
    }
    S.to_X.source = &S.sset;
    S.to_X.target = g.source;
    S.to_X.level_map.resize(cap + 1);
    for (int k = 0; k <= cap; ++k)
        for (const auto& [x, z] : S.pairs[k])
            S.to_X.level_map[k].push_back(x);
    return S;
}

ValidationReport validate_homotopy(const Product& interval_x, const SimplicialMap& h,
                                   const SimplicialMap& from, const SimplicialMap& to) {
    ValidationReport rep = validate_simplicial_map(h);
    if (!rep.ok())
        return rep;
    const TruncatedSimplicialSet& X = *from.source;
    int cap = h.cap();
    for (int eps = 0; eps <= 1; ++eps) {
        const SimplicialMap& endpoint = eps == 0 ? from : to;
        for (int n = 0; n <= cap; ++n) {
            int const_idx = std_simplex_index(1, SimplexMap::constant(n, 1, eps));
            for (std::size_t x = 0; x < X.size(n); ++x) {
                int p = interval_x.index_of(n, const_idx, static_cast<int>(x));
                if (h.apply(n, p) != endpoint.apply(n, static_cast<int>(x)))
                    rep.add(Issue::Kind::Algebra, "endpoint",
                            "endpoint " + std::to_string(eps) + " mismatch at level " +
                                std::to_string(n) + " on " + X.labels[n][x],
                            X.labels[n][x]);
            }
        }
    }
    return rep;
}

namespace {

Int abs_checked(Int a) {
    if (a == std::numeric_limits<Int>::min())
        throw OverflowError("absolute value overflow");
    return a < 0 ? -a : a;
}

}  // namespace

std::vector<Int> smith_invariants(std::vector<std::vector<Int>> a) {
    std::vector<Int> invariants;
    if (a.empty() || a[0].empty())
        return invariants;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot of smallest absolute value in the remaining block.
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (best == 0 || abs_checked(a[i][j]) < abs_checked(best))) {
                    best = a[i][j];
                    pi = i;
                    pj = j;
                }
        if (best == 0)
            break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < rows; ++i)
            std::swap(a[i][t], a[i][pj]);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] = checked_add(a[i][j], checked_mul(-q, a[t][j]));
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                Int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] = checked_add(a[i][j], checked_mul(-q, a[i][t]));
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i)
                        std::swap(a[i][t], a[i][j]);
                    again = true;
                }
            }
            if (again)
                continue;
            // Pivot must divide the rest of the block; if not, fold the
            // offending row in and eliminate again.
            for (std::size_t i = t + 1; i < rows && !again; ++i)
                for (std::size_t j = t + 1; j < cols && !again; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj)
                            a[t][jj] = checked_add(a[t][jj], a[i][jj]);
                        again = true;
                    }
        }
        ++t;
    }
    for (std::size_t i = 0; i < std::min(rows, cols); ++i)
        if (a[i][i] != 0)
            invariants.push_back(abs_checked(a[i][i]));
    return invariants;
}

std::vector<HomologyGroup> homology(const TruncatedSimplicialSet& X, int up_to, bool reduced) {
    if (up_to > X.cap - 1)
        throw InputError("homology requested beyond the validity range (cap-1)");
    // Nondegenerate simplices per level, flagged in one sweep.
    std::vector<std::vector<char>> degenerate(X.cap + 1);
    for (int n = 0; n <= X.cap; ++n)
        degenerate[n].assign(X.size(n), 0);
    for (int n = 0; n < X.cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t y = 0; y < X.size(n); ++y)
                degenerate[n + 1][X.s(n, i, static_cast<int>(y))] = 1;
    std::vector<std::vector<int>> nondeg(X.cap + 1);
    std::vector<std::vector<int>> rank_in_level(X.cap + 1);
    for (int n = 0; n <= X.cap; ++n) {
        rank_in_level[n].assign(X.size(n), -1);
        for (std::size_t x = 0; x < X.size(n); ++x)
            if (!degenerate[n][x]) {
                rank_in_level[n][x] = static_cast<int>(nondeg[n].size());
                nondeg[n].push_back(static_cast<int>(x));
            }
    }
    // Boundary matrices of the normalized complex.
    auto boundary = [&](int n) {
        std::vector<std::vector<Int>> mat(nondeg[n - 1].size(),
                                          std::vector<Int>(nondeg[n].size(), 0));
        for (std::size_t c = 0; c < nondeg[n].size(); ++c)
            for (int i = 0; i <= n; ++i) {
                int fx = X.d(n, i, nondeg[n][c]);
                int r = rank_in_level[n - 1][fx];
                if (r >= 0)
                    mat[r][c] = checked_add(mat[r][c], i % 2 == 0 ? 1 : -1);
            }
        return mat;
    };

    std::vector<HomologyGroup> out;
    for (int k = 0; k <= up_to; ++k) {
        Int nk = static_cast<Int>(nondeg[k].size());
        Int rank_dk = 0;
        if (k == 0) {
            if (reduced && nk > 0)
                rank_dk = 1;  // augmentation row of ones has rank 1
        } else {
            rank_dk = static_cast<Int>(smith_invariants(boundary(k)).size());
        }
        std::vector<Int> inv_up = smith_invariants(boundary(k + 1));
        HomologyGroup g;
        g.degree = k;
        g.free_rank = nk - rank_dk - static_cast<Int>(inv_up.size());
        for (Int d : inv_up)
            if (d != 1 && d != -1)
                g.torsion.push_back(d);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace adc
