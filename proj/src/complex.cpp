#include "adc/complex.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace adc {

void AdcComplex::rebuild_index() {
    degree_of.clear();
    pos_of.clear();
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        for (int p = 0; p < static_cast<int>(basis[i].size()); ++p) {
            const Id& id = basis[i][p];
            if (!degree_of.emplace(id, i).second)
                throw InputError("duplicate basis identifier: " + id);
            pos_of.emplace(id, p);
        }
    }
}

int AdcComplex::degree(const Id& id) const {
    auto it = degree_of.find(id);
    if (it == degree_of.end())
        throw InputError("unknown basis identifier: " + id);
    return it->second;
}

ChainElement AdcComplex::d(const Id& id) const {
    int deg = degree(id);
    if (deg == 0)
        return ChainElement(0);
    auto it = diff.find(id);
    if (it == diff.end())
        throw InputError("missing differential for basis element: " + id);
    return it->second;
}

ChainElement AdcComplex::d(const ChainElement& x) const {
    if (x.is_zero() || x.degree() == 0)
        return ChainElement(x.degree() > 0 ? x.degree() - 1 : 0);
    ChainElement out(x.degree() - 1);
    for (const auto& [id, c] : x.terms()) {
        ChainElement dx = d(id);
        dx *= c;
        out += dx;
    }
    return out;
}

Int AdcComplex::e(const Id& id) const {
    auto it = aug.find(id);
    if (it == aug.end())
        throw InputError("missing augmentation for basis element: " + id);
    return it->second;
}

Int AdcComplex::e(const ChainElement& x) const {
    if (x.is_zero())
        return 0;
    if (x.degree() != 0)
        throw InternalError("augmentation applied in positive degree");
    Int out = 0;
    for (const auto& [id, c] : x.terms())
        out = checked_add(out, checked_mul(c, e(id)));
    return out;
}

ComplexPtr finalize(AdcComplex k) {
    k.rebuild_index();
    return std::make_shared<const AdcComplex>(std::move(k));
}

bool same_presentation(const AdcComplex& a, const AdcComplex& b) {
    if (a.max_degree != b.max_degree || a.basis != b.basis)
        return false;
    for (const auto& ids : a.basis)
        for (const auto& id : ids) {
            int deg = a.degree_of.at(id);
            if (deg >= 1) {
                if (a.diff.at(id) != b.diff.at(id))
                    return false;
            } else if (a.aug.at(id) != b.aug.at(id)) {
                return false;
            }
        }
    return true;
}

std::string ValidationReport::to_string() const {
    if (ok())
        return "valid";
    std::ostringstream out;
    for (const auto& i : issues)
        out << (i.kind == Issue::Kind::Input ? "[input] " : "[algebra] ") << i.code << ": "
            << i.message << "\n";
    return out.str();
}

ValidationReport validate_element(const AdcComplex& K, const ChainElement& x) {
    ValidationReport rep;
    for (const auto& [id, c] : x.terms()) {
        auto it = K.degree_of.find(id);
        if (it == K.degree_of.end())
            rep.add(Issue::Kind::Input, "unknown-id", "element references unknown id " + id, id);
        else if (!x.is_zero() && it->second != x.degree())
            rep.add(Issue::Kind::Input, "degree-mismatch",
                    "id " + id + " has degree " + std::to_string(it->second) +
                        ", element claims " + std::to_string(x.degree()),
                    id);
    }
    return rep;
}

ValidationReport validate_complex(const AdcComplex& K) {
    ValidationReport rep;
    if (K.max_degree < 0) {
        rep.add(Issue::Kind::Input, "bad-max-degree", "max_degree must be non-negative");
        return rep;
    }
    if (static_cast<int>(K.basis.size()) != K.max_degree + 1) {
        rep.add(Issue::Kind::Input, "bad-basis-shape",
                "basis must hold exactly max_degree+1 levels");
        return rep;
    }

    // Identifier uniqueness across the whole complex.
    std::unordered_map<Id, int> seen;
    for (int i = 0; i <= K.max_degree; ++i)
        for (const Id& id : K.basis[i]) {
            auto [it, inserted] = seen.emplace(id, i);
            if (!inserted)
                rep.add(Issue::Kind::Input, "duplicate-id",
                        "identifier " + id + " appears in degrees " +
                            std::to_string(it->second) + " and " + std::to_string(i),
                        id);
        }
    if (!rep.ok())
        return rep;

    // Reference well-formedness of d and e tables.
    for (int i = 1; i <= K.max_degree; ++i)
        for (const Id& id : K.basis[i]) {
            auto it = K.diff.find(id);
            if (it == K.diff.end()) {
                rep.add(Issue::Kind::Input, "missing-d", "no differential for " + id, id);
                continue;
            }
            for (const auto& [ref, c] : it->second.terms()) {
                auto dit = K.degree_of.find(ref);
                if (dit == K.degree_of.end())
                    rep.add(Issue::Kind::Input, "unknown-id",
                            "d(" + id + ") references unknown id " + ref, id);
                else if (dit->second != i - 1)
                    rep.add(Issue::Kind::Input, "degree-mismatch",
                            "d(" + id + ") references " + ref + " of degree " +
                                std::to_string(dit->second) + ", expected " + std::to_string(i - 1),
                            id);
            }
        }
    for (const Id& id : K.basis[0])
        if (!K.aug.count(id))
            rep.add(Issue::Kind::Input, "missing-e", "no augmentation for " + id, id);
    if (!rep.ok())
        return rep;

    // d.d = 0 in degrees >= 2.
    for (int i = 2; i <= K.max_degree; ++i)
        for (const Id& id : K.basis[i]) {
            ChainElement dd = K.d(K.d(id));
            if (!dd.is_zero())
                rep.add(Issue::Kind::Algebra, "d-squared",
                        "d(d(" + id + ")) = " + dd.to_string(), id);
        }
    // e.d = 0 in degree 1.
    if (K.max_degree >= 1)
        for (const Id& id : K.basis[1]) {
            Int ed = K.e(K.d(id));
            if (ed != 0)
                rep.add(Issue::Kind::Algebra, "e-d",
                        "e(d(" + id + ")) = " + std::to_string(ed), id);
        }
    return rep;
}

PositiveParts positive_parts(const AdcComplex& K, const ChainElement& x) {
    ValidationReport rep = validate_element(K, x);
    if (!rep.ok())
        throw InputError("malformed element: " + rep.to_string());
    PositiveParts out;
    out.plus = ChainElement(x.degree());
    out.minus = ChainElement(x.degree());
    for (const auto& [id, c] : x.terms()) {
        out.support.insert(id);
        if (c > 0)
            out.plus.add_term(id, c);
        else
            out.minus.add_term(id, checked_mul(c, -1));
    }
    return out;
}

Preorder len_preorder(const AdcComplex& K) {
    Preorder po;
    for (const auto& ids : K.basis)
        for (const Id& id : ids) {
            po.index.emplace(id, po.elements.size());
            po.elements.push_back(id);
        }
    std::size_t n = po.elements.size();
    std::vector<std::vector<std::size_t>> succ(n);

    for (int i = 1; i <= K.max_degree; ++i)
        for (const Id& x : K.basis[i]) {
            PositiveParts parts = positive_parts(K, K.d(x));
            std::size_t xi = po.index.at(x);
            for (const auto& [y, c] : parts.minus.terms()) {
                succ[po.index.at(y)].push_back(xi);
                po.generating_edges.emplace_back(y, x);
            }
            for (const auto& [z, c] : parts.plus.terms()) {
                succ[xi].push_back(po.index.at(z));
                po.generating_edges.emplace_back(x, z);
            }
        }

    po.reach.assign(n, std::vector<char>(n, 0));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<std::size_t> q;
        q.push(s);
        po.reach[s][s] = 1;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t w : succ[v])
                if (!po.reach[s][w]) {
                    po.reach[s][w] = 1;
                    q.push(w);
                }
        }
    }

    for (std::size_t a = 0; a < n && po.antisymmetric; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (po.reach[a][b] && po.reach[b][a]) {
                po.antisymmetric = false;
                po.loop_witness = {po.elements[a], po.elements[b]};
                break;
            }
    return po;
}

std::string CellTable::to_string() const {
    std::ostringstream out;
    out << "[dim " << dimension << "]";
    for (int k = 0; k <= dimension; ++k)
        out << " {" << rows[k][0].to_string() << " ; " << rows[k][1].to_string() << "}";
    return out.str();
}

CellTable atom(const AdcComplex& K, const Id& x) {
    int i = K.degree(x);
    CellTable t;
    t.dimension = i;
    t.rows.assign(i + 1, {ChainElement(0), ChainElement(0)});
    t.rows[i][0] = ChainElement::single(i, x);
    t.rows[i][1] = t.rows[i][0];
    for (int k = i; k >= 1; --k) {
        t.rows[k - 1][0] = positive_parts(K, K.d(t.rows[k][0])).minus;
        t.rows[k - 1][1] = positive_parts(K, K.d(t.rows[k][1])).plus;
    }
    t.augmentation_ok = K.e(t.rows[0][0]) == 1 && K.e(t.rows[0][1]) == 1;
    return t;
}

BasisClassification classify_basis(const AdcComplex& K) {
    BasisClassification c;
    c.unital = true;
    for (const auto& ids : K.basis)
        for (const Id& id : ids)
            if (!atom(K, id).augmentation_ok) {
                c.unital = false;
                break;
            }
    c.strongly_loop_free = len_preorder(K).antisymmetric;
    c.steiner_strong = c.unital && c.strongly_loop_free;
    return c;
}

}  // namespace adc
