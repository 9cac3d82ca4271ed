#include "motivic/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace motivic {

std::string Generator::str() const {
    if (kind == Kind::Unit)
        return "(" + arg.str() + ")";
    std::ostringstream os;
    os << "rho_" << k << "(" << arg.str() << ")";
    return os.str();
}

int compare(const Generator& x, const Generator& y) {
    if (x.kind != y.kind)
        return x.kind == Generator::Kind::Unit ? -1 : 1;
    if (x.k != y.k)
        return x.k < y.k ? -1 : 1;
    return compare(x.arg, y.arg);
}

Generator unit_gen(const FieldValue& u) {
    if (u.is_zero() || u.is_one())
        throw std::domain_error("unit_gen: point must avoid z = 0 and z = 1, got " + u.str());
    Generator g;
    g.kind = Generator::Kind::Unit;
    g.k = 1;
    g.arg = u;
    return g;
}

Generator rho_gen(int k, const FieldValue& a) {
    if (k < 1)
        throw std::domain_error("rho_gen: k must be >= 1");
    if (a.is_zero() || a.is_one())
        throw std::domain_error("rho_gen: a must avoid {0,1}, got " + a.str());
    if (k == 1)
        return unit_gen(one_minus(a)); // canonical form of the k = 1 cycle
    Generator g;
    g.kind = Generator::Kind::Rho;
    g.k = k;
    g.arg = a;
    return g;
}

Bidegree Monomial::bidegree() const {
    Bidegree d{0, 0};
    for (const auto& g : gens)
        d = d + g.bidegree();
    return d;
}

std::string Monomial::str() const {
    if (gens.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i)
            s += "*";
        s += gens[i].str();
    }
    return s;
}

int compare(const Monomial& x, const Monomial& y) {
    if (x.gens.size() != y.gens.size())
        return x.gens.size() < y.gens.size() ? -1 : 1;
    for (size_t i = 0; i < x.gens.size(); ++i)
        if (int c = compare(x.gens[i], y.gens[i]); c != 0)
            return c;
    return 0;
}

CdgaElement CdgaElement::one() {
    CdgaElement e;
    e.terms_[Monomial{}] = 1;
    return e;
}

CdgaElement CdgaElement::from_gen(const Generator& g) {
    CdgaElement e;
    e.terms_[Monomial{{g}}] = 1;
    return e;
}

CdgaElement CdgaElement::from_monomial(Monomial m, Rat coeff) {
    CdgaElement e;
    if (coeff != 0)
        e.terms_[std::move(m)] = std::move(coeff);
    return e;
}

void CdgaElement::add_term(Monomial m, Rat coeff) {
    if (coeff == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(coeff));
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

bool CdgaElement::is_homogeneous() const {
    if (terms_.empty())
        return true;
    Bidegree d = terms_.begin()->first.bidegree();
    for (const auto& [m, c] : terms_)
        if (!(m.bidegree() == d))
            return false;
    return true;
}

Bidegree CdgaElement::bidegree() const {
    if (terms_.empty())
        throw std::logic_error("bidegree: zero element has no bidegree");
    Bidegree d = terms_.begin()->first.bidegree();
    for (const auto& [m, c] : terms_)
        if (!(m.bidegree() == d))
            throw std::logic_error("bidegree: element is not homogeneous");
    return d;
}

CdgaElement& CdgaElement::operator+=(const CdgaElement& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

CdgaElement& CdgaElement::operator-=(const CdgaElement& o) {
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

CdgaElement& CdgaElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

// Merge two strictly sorted generator lists. Every generator has odd
// cohomological degree, so the Koszul sign is the parity of the merge
// inversions and a repeated generator kills the product.
CdgaElement monomial_product(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.gens.reserve(x.gens.size() + y.gens.size());
    size_t i = 0, j = 0;
    long inversions = 0;
    while (i < x.gens.size() && j < y.gens.size()) {
        int c = compare(x.gens[i], y.gens[j]);
        if (c == 0)
            return CdgaElement::zero();
        if (c < 0) {
            out.gens.push_back(x.gens[i++]);
        } else {
            inversions += static_cast<long>(x.gens.size() - i);
            out.gens.push_back(y.gens[j++]);
        }
    }
    for (; i < x.gens.size(); ++i)
        out.gens.push_back(x.gens[i]);
    for (; j < y.gens.size(); ++j)
        out.gens.push_back(y.gens[j]);
    Rat sign = (inversions % 2 == 0) ? 1 : -1;
    return CdgaElement::from_monomial(std::move(out), sign);
}

CdgaElement operator*(const CdgaElement& a, const CdgaElement& b) {
    CdgaElement out;
    for (const auto& [mx, cx] : a.terms())
        for (const auto& [my, cy] : b.terms()) {
            CdgaElement p = monomial_product(mx, my);
            p *= cx * cy;
            out += p;
        }
    return out;
}

CdgaElement unit_elt(const FieldValue& u) {
    return CdgaElement::from_gen(unit_gen(u));
}

CdgaElement rho_elt(int k, const FieldValue& a) {
    return CdgaElement::from_gen(rho_gen(k, a));
}

namespace {

// d of a single generator. d(a point) = 0: a point of the 1-cube meets no
// cubical face. d(rho_k) = -(a) * rho_{k-1}, with rho_1 = (1-a) closed.
CdgaElement gen_differential(const Generator& g) {
    if (g.kind == Generator::Kind::Unit)
        return CdgaElement::zero();
    return -(unit_elt(g.arg) * rho_elt(g.k - 1, g.arg));
}

} // namespace

CdgaElement differential(const CdgaElement& z) {
    CdgaElement out;
    for (const auto& [m, c] : z.terms()) {
        // Leibniz over the monomial; generators are odd so the sign in front
        // of the i-th slot is (-1)^i.
        for (size_t i = 0; i < m.gens.size(); ++i) {
            CdgaElement dg = gen_differential(m.gens[i]);
            if (dg.is_zero())
                continue;
            Monomial left{{m.gens.begin(), m.gens.begin() + i}};
            Monomial right{{m.gens.begin() + i + 1, m.gens.end()}};
            Rat sign = (i % 2 == 0) ? c : -c;
            CdgaElement piece = CdgaElement::from_monomial(left, sign);
            piece = piece * dg;
            piece = piece * CdgaElement::from_monomial(right, 1);
            out += piece;
        }
    }
    return out;
}

Rat augmentation(const CdgaElement& z) {
    auto it = z.terms().find(Monomial{});
    return it == z.terms().end() ? Rat(0) : it->second;
}

std::string CdgaElement::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            s += " + ";
        first = false;
        s += c.str() + "·" + m.str();
    }
    return s;
}

} // namespace motivic
