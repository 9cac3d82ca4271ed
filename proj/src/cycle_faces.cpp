#include "motivic/cycle_faces.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace motivic {

namespace {

int compare(const CycCoef& x, const CycCoef& y) {
    if (x.q != y.q)
        return x.q < y.q ? -1 : 1;
    if (x.sym != y.sym)
        return x.sym < y.sym ? -1 : 1;
    if (x.spow != y.spow)
        return x.spow < y.spow ? -1 : 1;
    return 0;
}

CycCoef coef_mul(const CycCoef& x, const CycCoef& y) {
    CycCoef out;
    out.q = x.q * y.q;
    if (!x.sym.empty() && !y.sym.empty() && x.sym != y.sym)
        throw UnresolvedFaceError("coefficient would mix field symbols " + x.sym + " and " +
                                  y.sym);
    out.sym = x.sym.empty() ? y.sym : x.sym;
    out.spow = x.spow + y.spow;
    if (out.spow == 0)
        out.sym.clear();
    return out;
}

CycCoef coef_pow(const CycCoef& x, int e) {
    CycCoef out;
    out.q = 1;
    Rat base = x.q;
    int n = e >= 0 ? e : -e;
    for (int i = 0; i < n; ++i)
        out.q *= base;
    if (e < 0)
        out.q = Rat(1) / out.q;
    out.spow = x.spow * e;
    out.sym = out.spow == 0 ? std::string{} : x.sym;
    return out;
}

bool coef_is_one(const CycCoef& x) { return x.q == 1 && x.spow == 0; }

CycMono mono_mul(const CycMono& x, const CycMono& y) {
    CycMono out;
    out.c = coef_mul(x.c, y.c);
    size_t i = 0, j = 0;
    while (i < x.expo.size() && j < y.expo.size()) {
        if (x.expo[i].first == y.expo[j].first) {
            int e = x.expo[i].second + y.expo[j].second;
            if (e != 0)
                out.expo.emplace_back(x.expo[i].first, e);
            ++i, ++j;
        } else if (x.expo[i].first < y.expo[j].first) {
            out.expo.push_back(x.expo[i++]);
        } else {
            out.expo.push_back(y.expo[j++]);
        }
    }
    for (; i < x.expo.size(); ++i)
        out.expo.push_back(x.expo[i]);
    for (; j < y.expo.size(); ++j)
        out.expo.push_back(y.expo[j]);
    return out;
}

CycMono mono_pow(const CycMono& x, int e) {
    CycMono out;
    out.c = coef_pow(x.c, e);
    for (auto [p, ex] : x.expo)
        if (ex * e != 0)
            out.expo.emplace_back(p, ex * e);
    return out;
}

int compare_mono(const CycMono& x, const CycMono& y) {
    // parameters ascending; at equal parameter, positive exponent first, so
    // the as-built coordinate order of the polylog cycles is canonical
    if (x.expo.size() != y.expo.size())
        return x.expo.size() < y.expo.size() ? -1 : 1;
    for (size_t i = 0; i < x.expo.size(); ++i) {
        if (x.expo[i].first != y.expo[i].first)
            return x.expo[i].first < y.expo[i].first ? -1 : 1;
        if (x.expo[i].second != y.expo[i].second)
            return x.expo[i].second > y.expo[i].second ? -1 : 1;
    }
    return compare(x.c, y.c);
}

} // namespace

int compare(const CoordExpr& x, const CoordExpr& y) {
    if (x.special != y.special)
        return static_cast<int>(x.special) < static_cast<int>(y.special) ? -1 : 1;
    if (x.special != CoordExpr::Special::None)
        return 0;
    if (x.one_minus != y.one_minus)
        return x.one_minus ? 1 : -1;
    return compare_mono(x.m, y.m);
}

std::string CoordExpr::str() const {
    switch (special) {
    case Special::Zero:
        return "0";
    case Special::One:
        return "1";
    case Special::Inf:
        return "inf";
    case Special::None:
        break;
    }
    std::ostringstream os;
    if (one_minus)
        os << "1-";
    bool printed = false;
    if (!coef_is_one(m.c) || m.expo.empty()) {
        os << m.c.q.str();
        if (m.c.spow != 0) {
            os << "*" << m.c.sym;
            if (m.c.spow != 1)
                os << "^" << m.c.spow;
        }
        printed = true;
    }
    for (auto [p, e] : m.expo) {
        if (printed)
            os << "*";
        os << "x" << p;
        if (e != 1)
            os << "^" << e;
        printed = true;
    }
    return os.str();
}

namespace {

// Inversion z -> 1/z stays in the grammar exactly when the coordinate is a
// plain monomial.
std::optional<CoordExpr> invert(const CoordExpr& e) {
    if (e.special == CoordExpr::Special::Zero) {
        CoordExpr o = e;
        o.special = CoordExpr::Special::Inf;
        return o;
    }
    if (e.special == CoordExpr::Special::Inf) {
        CoordExpr o = e;
        o.special = CoordExpr::Special::Zero;
        return o;
    }
    if (e.special == CoordExpr::Special::One)
        return e;
    if (e.one_minus)
        return std::nullopt;
    CoordExpr o;
    o.m = mono_pow(e.m, -1);
    return o;
}

std::set<int> params_of(const CoordTuple& coords) {
    std::set<int> ps;
    for (const auto& e : coords)
        if (e.special == CoordExpr::Special::None)
            for (auto [p, ex] : e.m.expo)
                ps.insert(p);
    return ps;
}

CoordTuple relabel(const CoordTuple& coords, const std::map<int, int>& names) {
    CoordTuple out = coords;
    for (auto& e : out) {
        if (e.special != CoordExpr::Special::None)
            continue;
        for (auto& [p, ex] : e.m.expo)
            p = names.at(p);
        std::sort(e.m.expo.begin(), e.m.expo.end());
    }
    return out;
}

struct Candidate {
    CoordTuple tuple;
    int sign = 1;
};

// Canonical form of one representative: minimize over parameter
// relabelings, per-coordinate orientation, and coordinate sorting. Returns
// nullopt when a sign-reversing symmetry or the divisor kills the term.
std::optional<Candidate> canonical_form(const CoordTuple& coords) {
    fprintf(stderr, "canon: enter n=%zu\n", coords.size());
    for (const auto& e : coords)
        if (e.special == CoordExpr::Special::One)
            return std::nullopt; // lies in the divisor

    std::vector<int> params(params_of(coords).begin(), params_of(coords).end());
    if (params.size() > 6)
        throw UnresolvedFaceError("too many parameters for orbit canonicalization");

    std::vector<int> perm(params.size());
    for (size_t i = 0; i < perm.size(); ++i)
        perm[i] = static_cast<int>(i);

    fprintf(stderr, "canon: params=%zu\n", params.size());
    std::optional<Candidate> best;
    bool conflict = false;
    std::vector<int> order = perm;
    std::sort(order.begin(), order.end());
    do {
        std::map<int, int> names;
        for (size_t i = 0; i < params.size(); ++i)
            names[params[i]] = order[i];
        fprintf(stderr, "canon: perm iteration\n");
        CoordTuple t = relabel(coords, names);
        fprintf(stderr, "canon: relabeled\n");

        int sign = 1;
        for (auto& e : t) {
            auto inv = invert(e);
            if (!inv)
                continue;
            int c = compare(*inv, e);
            if (c == 0)
                return std::nullopt; // fixed by an inversion, character -1
            if (c < 0) {
                e = *inv;
                sign = -sign;
            }
        }
        fprintf(stderr, "canon: oriented\n");
        // insertion sort, tracking the permutation character
        for (size_t i = 1; i < t.size(); ++i)
            for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
                std::swap(t[j], t[j - 1]);
                sign = -sign;
            }
        for (size_t i = 0; i + 1 < t.size(); ++i)
            if (t[i] == t[i + 1])
                return std::nullopt; // repeated coordinate, killed by a transposition

        fprintf(stderr, "canon: sorted\n");
        if (!best || t < best->tuple) {
            best = Candidate{std::move(t), sign};
            conflict = false;
        } else if (t == best->tuple && sign != best->sign) {
            conflict = true;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    fprintf(stderr, "canon: loop done\n");
    if (conflict)
        return std::nullopt; // same canonical tuple reachable with both signs
    for (const auto& e : best->tuple)
        if (e.special != CoordExpr::Special::None)
            throw UnresolvedFaceError("coordinate pinned at " + e.str() +
                                      " survives alternation; improper face");
    return best;
}

} // namespace

void AltCycle::add_representative(const CoordTuple& coords, const Rat& coeff) {
    if (static_cast<int>(coords.size()) != ambient_)
        throw std::invalid_argument("AltCycle: representative has the wrong ambient dimension");
    if (coeff == 0)
        return;
    auto canon = canonical_form(coords);
    if (!canon)
        return;
    Rat c = coeff * canon->sign;
    auto it = terms_.find(canon->tuple);
    if (it == terms_.end()) {
        terms_.emplace(std::move(canon->tuple), std::move(c));
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

AltCycle& AltCycle::operator+=(const AltCycle& o) {
    if (!o.is_zero() && !is_zero() && o.ambient_ != ambient_)
        throw std::invalid_argument("AltCycle: ambient dimension mismatch");
    if (is_zero())
        ambient_ = o.ambient_;
    for (const auto& [t, c] : o.terms_) {
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

AltCycle& AltCycle::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, v] : terms_)
        v *= c;
    return *this;
}

std::string AltCycle::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first)
            s += " + ";
        first = false;
        s += c.str() + "*(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i)
                s += ", ";
            s += t[i].str();
        }
        s += ")";
    }
    return s;
}

bool alt_equal(const AltCycle& a, const AltCycle& b) {
    if (!a.is_zero() && !b.is_zero() && a.ambient() != b.ambient())
        throw std::invalid_argument("alt_equal: ambient dimension mismatch");
    return a.terms() == b.terms();
}

int param_count(const CoordTuple& coords) {
    return static_cast<int>(params_of(coords).size());
}

namespace {

CoordExpr const_coord(const FieldValue& u, bool negate_to_one_minus = false) {
    CoordExpr e;
    switch (u.kind) {
    case FieldKind::Rational:
        e.m.c.q = u.q;
        break;
    case FieldKind::Sym:
        e.m.c.q = 1;
        e.m.c.sym = u.sym;
        e.m.c.spow = 1;
        break;
    case FieldKind::OneMinusSym:
        e.one_minus = true;
        e.m.c.q = 1;
        e.m.c.sym = u.sym;
        e.m.c.spow = 1;
        break;
    }
    (void)negate_to_one_minus;
    return e;
}

} // namespace

AltCycle unit_point_cycle(const FieldValue& u) {
    if (u.is_zero() || u.is_one())
        throw std::domain_error("unit_point_cycle: point must avoid {0,1}");
    AltCycle c(1);
    c.add_representative({const_coord(u)}, 1);
    return c;
}

AltCycle rho_cycle(int k, const FieldValue& a) {
    if (k < 1)
        throw std::invalid_argument("rho_cycle: k must be >= 1");
    if (a.is_zero() || a.is_one())
        throw std::domain_error("rho_cycle: a must avoid {0,1}");
    if (k == 1)
        return unit_point_cycle(one_minus(a));
    if (a.kind == FieldKind::OneMinusSym)
        throw std::invalid_argument("rho_cycle: coefficient grammar needs a rational or a symbol");

    CycCoef ca;
    if (a.kind == FieldKind::Rational) {
        ca.q = a.q;
    } else {
        ca.q = 1;
        ca.sym = a.sym;
        ca.spow = 1;
    }

    CoordTuple coords;
    for (int j = 0; j < k - 1; ++j) {
        CoordExpr e;
        e.m.expo = {{j, 1}};
        coords.push_back(e);
    }
    {
        CoordExpr e;
        e.one_minus = true;
        e.m.expo = {{0, 1}};
        coords.push_back(e);
    }
    for (int j = 1; j < k - 1; ++j) {
        CoordExpr e;
        e.one_minus = true;
        e.m.expo = {{j - 1, -1}, {j, 1}};
        coords.push_back(e);
    }
    {
        CoordExpr e;
        e.one_minus = true;
        e.m.c = ca;
        e.m.expo = {{k - 2, -1}};
        coords.push_back(e);
    }

    const int half = (k * (k - 1) / 2) % 2;
    AltCycle c(2 * k - 1);
    c.add_representative(coords, half == 0 ? 1 : -1);
    return c;
}

namespace {

enum class Limit { ToZero, ToInf };

// Substitutes the limit x_p -> 0 or infinity into one coordinate.
CoordExpr substitute_limit(const CoordExpr& e, int p, Limit lim) {
    if (e.special != CoordExpr::Special::None)
        return e;
    int ep = 0;
    for (auto [q, ex] : e.m.expo)
        if (q == p)
            ep = ex;
    if (ep == 0)
        return e;
    const bool to_zero = (lim == Limit::ToZero) == (ep > 0);
    CoordExpr out;
    if (!e.one_minus) {
        out.special = to_zero ? CoordExpr::Special::Zero : CoordExpr::Special::Inf;
    } else {
        out.special = to_zero ? CoordExpr::Special::One : CoordExpr::Special::Inf;
    }
    return out;
}

// Substitutes the finite monomial value v for x_p.
CoordExpr substitute_value(const CoordExpr& e, int p, const CycMono& v) {
    if (e.special != CoordExpr::Special::None)
        return e;
    int ep = 0;
    for (auto [q, ex] : e.m.expo)
        if (q == p)
            ep = ex;
    if (ep == 0)
        return e;
    CycMono rest = e.m;
    rest.expo.erase(std::remove_if(rest.expo.begin(), rest.expo.end(),
                                   [p](auto pr) { return pr.first == p; }),
                    rest.expo.end());
    CycMono out = mono_mul(rest, mono_pow(v, ep));
    CoordExpr r;
    r.one_minus = e.one_minus;
    r.m = std::move(out);
    if (r.one_minus && r.m.is_const() && coef_is_one(r.m.c)) {
        r = CoordExpr{};
        r.special = CoordExpr::Special::Zero; // 1 - 1
    }
    return r;
}

// Resolves coords[idx] = alpha on one representative; returns the resolved
// tuple (with coordinate idx dropped) or nullopt for an empty intersection.
std::optional<CoordTuple> face_of_tuple(const CoordTuple& coords, size_t idx, FaceSide alpha) {
    const CoordExpr& e = coords[idx];
    if (e.special != CoordExpr::Special::None)
        throw UnresolvedFaceError("face: stored coordinate is special");

    auto drop = [&](auto&& subst) {
        CoordTuple out;
        out.reserve(coords.size() - 1);
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i == idx)
                continue;
            out.push_back(subst(coords[i]));
        }
        return out;
    };

    if (e.m.is_const()) {
        // A constant coordinate never equals 0 or infinity: constants in the
        // grammar are nonzero, finite, and generic in the symbol.
        return std::nullopt;
    }

    const bool wants_inf = alpha == FaceSide::Infinity;
    const bool equation_on_mono_is_limit = !e.one_minus || wants_inf;
    if (equation_on_mono_is_limit) {
        // m -> 0 / m -> infinity; resolvable when a single parameter drives it
        if (e.m.expo.size() != 1)
            throw UnresolvedFaceError("face: multi-parameter coordinate " + e.str() +
                                      " pinned at 0/inf");
        const int p = e.m.expo[0].first;
        const int ep = e.m.expo[0].second;
        Limit lim;
        if (!e.one_minus) {
            // m = alpha
            const bool mono_to_zero = !wants_inf;
            lim = (mono_to_zero == (ep > 0)) ? Limit::ToZero : Limit::ToInf;
        } else {
            // 1 - m = infinity, i.e. m = infinity
            lim = (ep > 0) ? Limit::ToInf : Limit::ToZero;
        }
        return drop([&](const CoordExpr& x) { return substitute_limit(x, p, lim); });
    }

    // 1 - m = 0: solve m = 1 for one parameter with exponent +-1.
    int p = -1, ep = 0;
    for (auto [q, ex] : e.m.expo)
        if (ex == 1 || ex == -1) {
            p = q;
            ep = ex;
        }
    if (p < 0)
        throw UnresolvedFaceError("face: no unit-exponent parameter in " + e.str());
    // m = c * x_p^{ep} * R = 1  =>  x_p = (c R)^{-ep}
    CycMono rest = e.m;
    rest.expo.erase(std::remove_if(rest.expo.begin(), rest.expo.end(),
                                   [p](auto pr) { return pr.first == p; }),
                    rest.expo.end());
    CycMono v = mono_pow(rest, -ep);
    return drop([&](const CoordExpr& x) { return substitute_value(x, p, v); });
}

} // namespace

AltCycle face(const AltCycle& c, int i, FaceSide alpha) {
    if (i < 1 || i > c.ambient())
        throw std::invalid_argument("face: index out of range");
    AltCycle out(c.ambient() - 1);
    for (const auto& [t, coeff] : c.terms()) {
        auto resolved = face_of_tuple(t, static_cast<size_t>(i - 1), alpha);
        if (resolved)
            out.add_representative(*resolved, coeff);
    }
    return out;
}

AltCycle boundary(const AltCycle& c) {
    AltCycle out(c.ambient() - 1);
    for (int i = 1; i <= c.ambient(); ++i) {
        const Rat sign = (i % 2 == 1) ? 1 : -1;
        out += face(c, i, FaceSide::Zero) * sign;
        out += face(c, i, FaceSide::Infinity) * (-sign);
    }
    return out;
}

AltCycle cycle_product(const AltCycle& a, const AltCycle& b) {
    AltCycle out(a.ambient() + b.ambient());
    for (const auto& [ta, ca] : a.terms()) {
        int shift = 0;
        for (int p : params_of(ta))
            shift = std::max(shift, p + 1);
        for (const auto& [tb, cb] : b.terms()) {
            CoordTuple t = ta;
            for (const auto& e : tb) {
                CoordExpr shifted = e;
                for (auto& [p, ex] : shifted.m.expo)
                    p += shift;
                t.push_back(std::move(shifted));
            }
            out.add_representative(t, ca * cb);
        }
    }
    return out;
}

} // namespace motivic
