#include "motivic/comodule.hpp"

#include <map>
#include <set>
#include <sstream>

namespace motivic {

AxiomReport check_axioms(const Comodule& v) {
    AxiomReport rep;
    const size_t n = v.dim();
    if (v.coaction.size() != n)
        throw StructureError("check_axioms: coaction matrix size mismatch");
    for (const auto& row : v.coaction)
        if (row.size() != n)
            throw StructureError("check_axioms: coaction matrix is not square");

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const auto& e = v.coaction[i][j];
            if (!e.is_zero() && !is_cocycle(e))
                throw StructureError("check_axioms: entry (" + v.basis[i].name + ", " +
                                     v.basis[j].name + ") is not a cocycle");
        }

    // (a) Adams-degree compatibility.
    rep.degree_ok = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const auto& e = v.coaction[i][j];
            const int gap = v.basis[i].adams - v.basis[j].adams;
            if (i == j) {
                if (!(e == BarElement::unit_word())) {
                    rep.degree_ok = false;
                    rep.issues.push_back("diagonal entry at " + v.basis[i].name +
                                         " is not the unit word");
                }
                continue;
            }
            if (gap <= 0 && !e.is_zero()) {
                rep.degree_ok = false;
                rep.issues.push_back("entry (" + v.basis[i].name + ", " + v.basis[j].name +
                                     ") nonzero with Adams gap <= 0");
                continue;
            }
            for (const auto& [w, c] : e.terms())
                if (w.adams_degree() != gap) {
                    rep.degree_ok = false;
                    rep.issues.push_back("entry (" + v.basis[i].name + ", " + v.basis[j].name +
                                         ") has a word of the wrong Adams degree");
                    break;
                }
        }

    // (b) Coassociativity: Delta(c_il) == sum_j c_jl (x) c_ij for all (i,l).
    rep.coassoc_ok = true;
    for (size_t i = 0; i < n && rep.coassoc_ok; ++i)
        for (size_t l = 0; l < n; ++l) {
            BarPairElement lhs = coproduct(v.coaction[i][l]);
            BarPairElement rhs;
            for (size_t j = 0; j < n; ++j)
                rhs += tensor_pair(v.coaction[j][l], v.coaction[i][j]);
            if (!(lhs == rhs)) {
                rep.coassoc_ok = false;
                rep.issues.push_back("coassociativity fails at (" + v.basis[i].name + ", " +
                                     v.basis[l].name + ")");
                break;
            }
        }

    // (c) Counitarity: e(c_ij) = delta_ij.
    rep.counit_ok = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Rat expected = (i == j) ? 1 : 0;
            if (counit(v.coaction[i][j]) != expected) {
                rep.counit_ok = false;
                rep.issues.push_back("counit fails at (" + v.basis[i].name + ", " +
                                     v.basis[j].name + ")");
            }
        }
    return rep;
}

namespace {

// The deconcatenation-closed span: all contiguous subwords (including the
// empty word) of words appearing in the coaction entries.
std::vector<BarWord> reachable_span(const Comodule& v) {
    std::set<BarWord> span;
    span.insert(BarWord{});
    for (const auto& row : v.coaction)
        for (const auto& e : row)
            for (const auto& [w, c] : e.terms())
                for (size_t lo = 0; lo <= w.letters.size(); ++lo)
                    for (size_t hi = lo; hi <= w.letters.size(); ++hi) {
                        BarWord sub;
                        sub.letters.assign(w.letters.begin() + lo, w.letters.begin() + hi);
                        span.insert(std::move(sub));
                    }
    return {span.begin(), span.end()};
}

} // namespace

KernelReport kernel_identity(const Comodule& v) {
    {
        AxiomReport ax = check_axioms(v);
        if (!ax.all())
            throw StructureError("kernel_identity: comodule fails the coaction axioms");
    }
    const size_t n = v.dim();
    const std::vector<BarWord> span = reachable_span(v);
    std::map<BarWord, size_t> span_index;
    for (size_t s = 0; s < span.size(); ++s)
        span_index[span[s]] = s;

    // Domain basis (i, w); target basis (i, w1, w2) built lazily.
    const size_t dom = n * span.size();
    std::map<std::tuple<size_t, size_t, size_t>, size_t> target_index;
    auto target_slot = [&](size_t i, size_t w1, size_t w2) {
        auto key = std::make_tuple(i, w1, w2);
        auto it = target_index.find(key);
        if (it != target_index.end())
            return it->second;
        size_t id = target_index.size();
        target_index.emplace(key, id);
        return id;
    };

    // Sparse columns of D = Delta_V (x) id - id (x) Delta.
    std::vector<std::map<size_t, Rat>> col(dom);
    for (size_t i = 0; i < n; ++i)
        for (size_t s = 0; s < span.size(); ++s) {
            auto& c = col[i * span.size() + s];
            for (size_t j = 0; j < n; ++j)
                for (const auto& [w, coeff] : v.coaction[i][j].terms()) {
                    auto wi = span_index.find(w);
                    if (wi == span_index.end())
                        throw StructureError("kernel_identity: entry word escaped the span");
                    c[target_slot(j, wi->second, s)] += coeff;
                }
            const BarWord& w = span[s];
            for (size_t cut = 0; cut <= w.letters.size(); ++cut) {
                BarWord l, r;
                l.letters.assign(w.letters.begin(), w.letters.begin() + cut);
                r.letters.assign(w.letters.begin() + cut, w.letters.end());
                c[target_slot(i, span_index.at(l), span_index.at(r))] -= 1;
            }
            for (auto it = c.begin(); it != c.end();)
                it = (it->second == 0) ? c.erase(it) : std::next(it);
        }

    // Dense matrix rows = target coordinates, columns = domain coordinates.
    RatMatrix mat(target_index.size(), RatRow(dom, Rat(0)));
    for (size_t cidx = 0; cidx < dom; ++cidx)
        for (const auto& [ridx, val] : col[cidx])
            mat[ridx][cidx] = val;

    KernelReport rep;
    rep.span_dim = static_cast<int>(span.size());
    RatMatrix ker = kernel_basis(mat, dom);
    rep.kernel_dim = static_cast<int>(ker.size());

    // Image of Delta_V: the rows Delta(v_i) expressed in the (j, w) basis.
    RatMatrix image;
    for (size_t i = 0; i < n; ++i) {
        RatRow row(dom, Rat(0));
        for (size_t j = 0; j < n; ++j)
            for (const auto& [w, coeff] : v.coaction[i][j].terms())
                row[j * span.size() + span_index.at(w)] += coeff;
        image.push_back(std::move(row));
    }
    rep.equals_image = same_row_space(ker, image);
    return rep;
}

Comodule tensor(const Comodule& v, const Comodule& w) {
    Comodule out;
    const size_t nv = v.dim(), nw = w.dim();
    out.basis.reserve(nv * nw);
    for (size_t i = 0; i < nv; ++i)
        for (size_t p = 0; p < nw; ++p)
            out.basis.push_back(
                {v.basis[i].name + "(x)" + w.basis[p].name, v.basis[i].adams + w.basis[p].adams});
    out.coaction.assign(nv * nw, std::vector<BarElement>(nv * nw));
    for (size_t i = 0; i < nv; ++i)
        for (size_t p = 0; p < nw; ++p)
            for (size_t j = 0; j < nv; ++j)
                for (size_t q = 0; q < nw; ++q)
                    out.coaction[i * nw + p][j * nw + q] =
                        shuffle(v.coaction[i][j], w.coaction[p][q]);
    return out;
}

Comodule tate(int r) {
    Comodule q;
    std::ostringstream name;
    name << "Q(" << r << ")";
    q.basis.push_back({name.str(), -r});
    q.coaction = {{BarElement::unit_word()}};
    return q;
}

Comodule kummer(const FieldValue& u) {
    Comodule m;
    m.basis.push_back({"f0", 0});
    m.basis.push_back({"f-1", -1});
    BarElement w = BarElement::word({unit_elt(u)});
    m.coaction = {{BarElement::unit_word(), w}, {BarElement::zero(), BarElement::unit_word()}};
    return m;
}

Comodule twist(const Comodule& v, int r) {
    Comodule out = v;
    for (auto& b : out.basis) {
        b.adams -= r;
        b.name += "(" + std::to_string(r) + ")";
    }
    return out;
}

Comodule sym_power_kummer(const FieldValue& u, int m) {
    if (m < 0)
        throw std::invalid_argument("sym_power_kummer: negative power");
    Comodule out;
    // basis g_t = f0^{m-t} f-1^t, Adams degree -t
    for (int t = 0; t <= m; ++t)
        out.basis.push_back({"g" + std::to_string(t), -t});
    out.coaction.assign(m + 1, std::vector<BarElement>(m + 1));
    BarElement w = BarElement::word({unit_elt(u)});
    for (int t = 0; t <= m; ++t)
        for (int s = t; s <= m; ++s) {
            const int i = s - t;
            // Delta(g_t) hits g_s with binomial(m-t, i) times the i-th
            // shuffle power of [(u)].
            BarElement entry = shuffle_power(w, i);
            entry *= Rat(binomial(m - t, i));
            out.coaction[t][s] = std::move(entry);
        }
    return out;
}

} // namespace motivic
