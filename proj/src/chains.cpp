#include "motivic/chains.hpp"

#include <sstream>

namespace motivic {

bool ChainPrim::has_even_dim() const {
    switch (kind) {
    case Kind::Eta:
        return (k + idx) % 2 == 0;
    case Kind::Xi:
        return false; // mixed dimensions; never reordered
    case Kind::PathPow:
        return idx % 2 == 0;
    }
    return false;
}

std::string ChainPrim::str() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Eta:
        os << "eta_" << k << "(" << idx << ";" << sym << ")";
        break;
    case Kind::Xi:
        os << "xi_" << k << "(" << sym << ")";
        break;
    case Kind::PathPow:
        os << "p(" << sym << ")^o" << idx;
        break;
    }
    return os.str();
}

int compare(const ChainPrim& x, const ChainPrim& y) {
    if (x.sym != y.sym)
        return x.sym < y.sym ? -1 : 1;
    if (x.kind != y.kind)
        return static_cast<int>(x.kind) < static_cast<int>(y.kind) ? -1 : 1;
    if (x.k != y.k)
        return x.k < y.k ? -1 : 1;
    if (x.idx != y.idx)
        return x.idx < y.idx ? -1 : 1;
    return 0;
}

std::string ChainSymbol::str() const {
    if (prims.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < prims.size(); ++i) {
        if (i)
            s += " o ";
        s += prims[i].str();
    }
    return s;
}

int compare(const ChainSymbol& x, const ChainSymbol& y) {
    if (x.prims.size() != y.prims.size())
        return x.prims.size() < y.prims.size() ? -1 : 1;
    for (size_t i = 0; i < x.prims.size(); ++i)
        if (int c = compare(x.prims[i], y.prims[i]); c != 0)
            return c;
    return 0;
}

ChainElement ChainElement::unit() {
    ChainElement e;
    e.terms_[ChainSymbol{}] = CdgaElement::one();
    return e;
}

ChainElement ChainElement::from_symbol(ChainSymbol s, CdgaElement coeff) {
    ChainElement e;
    if (!coeff.is_zero())
        e.terms_[std::move(s)] = std::move(coeff);
    return e;
}

void ChainElement::add_term(ChainSymbol s, CdgaElement coeff) {
    if (coeff.is_zero())
        return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(std::move(s), std::move(coeff));
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

ChainElement& ChainElement::operator+=(const ChainElement& o) {
    for (const auto& [s, c] : o.terms_)
        add_term(s, c);
    return *this;
}

ChainElement& ChainElement::operator-=(const ChainElement& o) {
    for (const auto& [s, c] : o.terms_)
        add_term(s, -c);
    return *this;
}

ChainElement& ChainElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, v] : terms_)
        v *= c;
    return *this;
}

std::string ChainElement::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [sym, c] : terms_) {
        if (!first)
            s += " + ";
        first = false;
        s += "(" + c.str() + ")*" + sym.str();
    }
    return s;
}

ChainElement eta(int k, int i, const std::string& sym) {
    if (k < 1 || i < 0 || i > k - 1)
        throw std::invalid_argument("eta: need k >= 1 and 0 <= i <= k-1");
    ChainPrim p;
    p.kind = ChainPrim::Kind::Eta;
    p.sym = sym;
    p.k = k;
    p.idx = i;
    return ChainElement::from_symbol(ChainSymbol{{p}});
}

ChainElement xi(int k, const std::string& sym) {
    if (k < 0)
        throw std::invalid_argument("xi: k must be >= 0");
    if (k == 0)
        return ChainElement::zero();
    ChainPrim p;
    p.kind = ChainPrim::Kind::Xi;
    p.sym = sym;
    p.k = k;
    return ChainElement::from_symbol(ChainSymbol{{p}});
}

ChainElement path_pow(int j, const std::string& sym) {
    if (j < 0)
        throw std::invalid_argument("path_pow: power must be >= 0");
    if (j == 0)
        return ChainElement::unit();
    ChainPrim p;
    p.kind = ChainPrim::Kind::PathPow;
    p.sym = sym;
    p.idx = j;
    return ChainElement::from_symbol(ChainSymbol{{p}});
}

ChainElement xi_eta_expansion(int k, const std::string& sym) {
    ChainElement out;
    for (int i = 0; i < k; ++i)
        out += eta(k, i, sym);
    return out;
}

ChainElement cycle_mul(const CdgaElement& z, const ChainElement& x) {
    ChainElement out;
    for (const auto& [s, c] : x.terms())
        out.add_term(s, z * c);
    return out;
}

namespace {

// d of a primitive as (cycle coefficient, remaining symbol or unit) pairs.
std::vector<std::pair<CdgaElement, ChainSymbol>> prim_d(const ChainPrim& p) {
    const FieldValue a = FieldValue::symbol(p.sym);
    std::vector<std::pair<CdgaElement, ChainSymbol>> out;
    switch (p.kind) {
    case ChainPrim::Kind::Eta:
        throw std::domain_error("chain_d: the differential acts on the packaged tower xi_k, "
                                "not on bare eta symbols");
    case ChainPrim::Kind::Xi: {
        out.emplace_back(-rho_elt(p.k, a), ChainSymbol{});
        if (p.k >= 2) {
            ChainPrim q = p;
            q.k = p.k - 1;
            out.emplace_back(-unit_elt(a), ChainSymbol{{q}});
        }
        break;
    }
    case ChainPrim::Kind::PathPow: {
        ChainPrim q = p;
        q.idx = p.idx - 1;
        ChainSymbol rest = (q.idx == 0) ? ChainSymbol{} : ChainSymbol{{q}};
        out.emplace_back(Rat(-p.idx) * unit_elt(a), rest);
        break;
    }
    }
    return out;
}

ChainSymbol splice(const ChainSymbol& s, size_t i, const ChainSymbol& repl) {
    ChainSymbol out;
    out.prims.reserve(s.prims.size() - 1 + repl.prims.size());
    for (size_t p = 0; p < i; ++p)
        out.prims.push_back(s.prims[p]);
    for (const auto& q : repl.prims)
        out.prims.push_back(q);
    for (size_t p = i + 1; p < s.prims.size(); ++p)
        out.prims.push_back(s.prims[p]);
    return out;
}

// Reorders factors by the sort key where graded commutativity allows it
// (an even chain dimension on either side of the swap), then composes
// adjacent path powers of the same tag.
ChainSymbol normalize_symbol(ChainSymbol s) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < s.prims.size(); ++i) {
            if (compare(s.prims[i + 1], s.prims[i]) < 0 &&
                (s.prims[i].has_even_dim() || s.prims[i + 1].has_even_dim())) {
                std::swap(s.prims[i], s.prims[i + 1]);
                moved = true;
            }
        }
    }
    for (size_t i = 0; i + 1 < s.prims.size();) {
        auto& u = s.prims[i];
        auto& v = s.prims[i + 1];
        if (u.kind == ChainPrim::Kind::PathPow && v.kind == ChainPrim::Kind::PathPow &&
            u.sym == v.sym) {
            u.idx += v.idx;
            s.prims.erase(s.prims.begin() + static_cast<long>(i) + 1);
        } else {
            ++i;
        }
    }
    return s;
}

} // namespace

ChainElement chain_d(const ChainElement& x) {
    ChainElement out;
    for (const auto& [s, w] : x.terms()) {
        // d(w * S) = dw * S + (-1)^{coh w} w * dS
        CdgaElement dw = differential(w);
        if (!dw.is_zero())
            out.add_term(s, std::move(dw));

        // Leibniz over the factors; every primitive has cohomological degree
        // zero, so no signs accumulate between them and the cycle produced by
        // d of a factor commutes out to the coefficient.
        for (size_t i = 0; i < s.prims.size(); ++i) {
            for (auto& [cyc, repl] : prim_d(s.prims[i])) {
                ChainSymbol ns = normalize_symbol(splice(s, i, repl));
                CdgaElement coeff;
                for (const auto& [m, c] : w.terms()) {
                    const int coh = m.bidegree().coh;
                    CdgaElement piece = CdgaElement::from_monomial(m, (coh % 2 == 0) ? c : -c);
                    coeff += piece * cyc;
                }
                out.add_term(std::move(ns), std::move(coeff));
            }
        }
    }
    return out;
}

ChainElement circ(const ChainElement& x, const ChainElement& y) {
    ChainElement out;
    for (const auto& [sx, wx] : x.terms())
        for (const auto& [sy, wy] : y.terms()) {
            // cycle coefficients commute past degree-zero chains, so both
            // coefficients collect on the left with the algebra's own sign
            ChainSymbol s;
            s.prims.reserve(sx.prims.size() + sy.prims.size());
            s.prims.insert(s.prims.end(), sx.prims.begin(), sx.prims.end());
            s.prims.insert(s.prims.end(), sy.prims.begin(), sy.prims.end());
            out.add_term(normalize_symbol(std::move(s)), wx * wy);
        }
    return out;
}

MotiveChain motive_d(const Connection& c, const MotiveChain& v) {
    const size_t n = c.dim();
    if (v.size() != n)
        throw std::invalid_argument("motive_d: component count mismatch");
    MotiveChain out(n);
    for (size_t i = 0; i < n; ++i)
        out[i] += chain_d(v[i]); // d_1
    for (size_t i = 0; i < n; ++i) {
        if (v[i].is_zero())
            continue;
        for (size_t j = 0; j < n; ++j)
            if (!c.gamma[i][j].is_zero())
                out[j] += cycle_mul(c.gamma[i][j], v[i]); // d_2
    }
    return out;
}

ZLBasis z_and_l_elements(int k, const std::string& sym) {
    if (k < 1)
        throw std::invalid_argument("z_and_l_elements: k must be >= 1");
    ZLBasis b;
    b.z.assign(static_cast<size_t>(k) + 1, ChainElement::zero());
    b.z[0] = ChainElement::unit();
    for (int j = 1; j <= k; ++j)
        b.z[static_cast<size_t>(j)] = xi(j, sym);
    for (int j = 1; j <= k; ++j) {
        MotiveChain lj(static_cast<size_t>(k) + 1, ChainElement::zero());
        for (int t = j; t <= k; ++t)
            lj[static_cast<size_t>(t)] =
                path_pow(t - j, sym) * Rat(Int(1), factorial(t - j));
        b.ell.push_back(std::move(lj));
    }
    return b;
}

int motive_chain_rank(const std::vector<MotiveChain>& xs) {
    // coordinates: (component, chain symbol, coefficient monomial)
    std::map<std::tuple<size_t, ChainSymbol, Monomial>, size_t> cols;
    auto slot = [&](size_t i, const ChainSymbol& s, const Monomial& m) {
        auto key = std::make_tuple(i, s, m);
        auto it = cols.find(key);
        if (it != cols.end())
            return it->second;
        size_t id = cols.size();
        cols.emplace(key, id);
        return id;
    };
    std::vector<std::map<size_t, Rat>> sparse;
    for (const auto& x : xs) {
        std::map<size_t, Rat> row;
        for (size_t i = 0; i < x.size(); ++i)
            for (const auto& [s, w] : x[i].terms())
                for (const auto& [m, c] : w.terms())
                    row[slot(i, s, m)] += c;
        sparse.push_back(std::move(row));
    }
    RatMatrix mat(sparse.size(), RatRow(cols.size(), Rat(0)));
    for (size_t r = 0; r < sparse.size(); ++r)
        for (const auto& [cidx, val] : sparse[r])
            mat[r][cidx] = val;
    return rank(std::move(mat));
}

int compare(const BarChainKey& x, const BarChainKey& y) {
    if (int c = compare(x.word, y.word); c != 0)
        return c;
    return compare(x.chain, y.chain);
}

void BarChainElement::add_term(BarWord w, ChainSymbol s, CdgaElement coeff) {
    if (coeff.is_zero())
        return;
    BarChainKey key{std::move(w), std::move(s)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(coeff));
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

BarChainElement& BarChainElement::operator+=(const BarChainElement& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k.word, k.chain, c);
    return *this;
}

std::string BarChainElement::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            s += " + ";
        first = false;
        s += k.word.str() + "((" + c.str() + ")*" + k.chain.str() + ")";
    }
    return s;
}

namespace {

inline int jsign_mon(const Monomial& m) { return (m.bidegree().coh % 2 == 0) ? 1 : -1; }

} // namespace

BarChainElement bar_chain_d(const BarChainElement& x) {
    BarChainElement out;
    for (const auto& [key, coeff] : x.terms()) {
        const auto& L = key.word.letters;
        const size_t s = L.size();

        // d_I letter terms
        for (size_t i = 0; i < s; ++i) {
            CdgaElement dl = differential(CdgaElement::from_monomial(L[i], 1));
            if (dl.is_zero())
                continue;
            int sg = (i % 2 == 0) ? -1 : 1;
            for (size_t p = 0; p < i; ++p)
                sg *= jsign_mon(L[p]);
            for (const auto& [dm, dc] : dl.terms()) {
                BarWord nw;
                nw.letters = L;
                nw.letters[i] = dm;
                out.add_term(std::move(nw), key.chain, coeff * (dc * sg));
            }
        }
        // d_I module term: (-1)^s [J a_1 | ... | J a_s] d(m)
        {
            int sg = (s % 2 == 0) ? 1 : -1;
            for (size_t p = 0; p < s; ++p)
                sg *= jsign_mon(L[p]);
            ChainElement dm = chain_d(ChainElement::from_symbol(key.chain, coeff));
            for (const auto& [ns, nc] : dm.terms())
                out.add_term(key.word, ns, nc * Rat(sg));
        }
        // d_E contractions
        for (size_t i = 0; i + 1 < s; ++i) {
            int sg = (i % 2 == 0) ? 1 : -1;
            for (size_t p = 0; p < i; ++p)
                sg *= jsign_mon(L[p]);
            sg *= jsign_mon(L[i]);
            CdgaElement prod = monomial_product(L[i], L[i + 1]);
            if (prod.is_zero())
                continue;
            for (const auto& [pm, pc] : prod.terms()) {
                BarWord nw;
                for (size_t p = 0; p < i; ++p)
                    nw.letters.push_back(L[p]);
                nw.letters.push_back(pm);
                for (size_t p = i + 2; p < s; ++p)
                    nw.letters.push_back(L[p]);
                out.add_term(std::move(nw), key.chain, coeff * (pc * sg));
            }
        }
        // d_E module term: (-1)^{s-1} [J a_1 | ... | J a_{s-1}] (a_s m)
        if (s >= 1) {
            int sg = (s % 2 == 1) ? 1 : -1;
            for (size_t p = 0; p + 1 < s; ++p)
                sg *= jsign_mon(L[p]);
            BarWord nw;
            nw.letters.assign(L.begin(), L.end() - 1);
            CdgaElement action = CdgaElement::from_monomial(L[s - 1], Rat(sg)) * coeff;
            out.add_term(std::move(nw), key.chain, std::move(action));
        }
    }
    return out;
}

} // namespace motivic
