#include "motivic/polylog.hpp"

#include <sstream>

namespace motivic {

BarElement li_word(int k, const FieldValue& a) {
    if (k < 1)
        throw std::invalid_argument("li_word: k must be >= 1");
    BarElement out;
    for (int j = 0; j < k; ++j) {
        std::vector<CdgaElement> letters;
        letters.reserve(j + 1);
        for (int t = 0; t < j; ++t)
            letters.push_back(unit_elt(a));
        letters.push_back(rho_elt(k - j, a));
        out += BarElement::word(letters);
    }
    return out;
}

namespace {

std::vector<BasisVector> polylog_basis(int k) {
    std::vector<BasisVector> basis;
    for (int j = 0; j <= k; ++j)
        basis.push_back({"e" + std::to_string(-j), -j});
    return basis;
}

// Gamma(e_0) = sum_j e_{-j} (x) rho_j(a); Gamma(e_{-j}) = e_{-j-1} (x) (a).
Connection polylog_connection(int k, const FieldValue& a) {
    const size_t n = static_cast<size_t>(k) + 1;
    std::vector<std::vector<CdgaElement>> gamma(n, std::vector<CdgaElement>(n));
    for (int j = 1; j <= k; ++j)
        gamma[0][static_cast<size_t>(j)] = rho_elt(j, a);
    for (int j = 1; j < k; ++j)
        gamma[static_cast<size_t>(j)][static_cast<size_t>(j) + 1] = unit_elt(a);
    Connection c = make_connection(polylog_basis(k), std::move(gamma));
    c.dependence_warning = mult_dependent_with_one_minus(a);
    return c;
}

// The coaction in closed form: Delta(e_0) picks up the polylog words,
// Delta(e_{-j}) the pure (a)-letter powers.
Comodule polylog_comodule(int k, const FieldValue& a) {
    const size_t n = static_cast<size_t>(k) + 1;
    Comodule m;
    m.basis = polylog_basis(k);
    m.coaction.assign(n, std::vector<BarElement>(n));
    for (size_t i = 0; i < n; ++i)
        m.coaction[i][i] = BarElement::unit_word();
    for (int j = 1; j <= k; ++j)
        m.coaction[0][static_cast<size_t>(j)] = li_word(j, a);
    for (int j = 1; j <= k; ++j)
        for (int t = j + 1; t <= k; ++t) {
            std::vector<CdgaElement> letters(static_cast<size_t>(t - j), unit_elt(a));
            m.coaction[static_cast<size_t>(j)][static_cast<size_t>(t)] =
                BarElement::word(letters);
        }
    return m;
}

} // namespace

PolylogMotive build_polylog(int k, const FieldValue& a) {
    if (k < 1)
        throw std::invalid_argument("build_polylog: k must be >= 1");
    if (a.is_zero() || a.is_one())
        throw std::domain_error("build_polylog: a must avoid {0,1}");
    PolylogMotive m;
    m.k = k;
    m.a = a;
    m.conn = polylog_connection(k, a);
    m.comod = polylog_comodule(k, a);
    // Round trip: the connection must regenerate the stated coaction.
    Comodule from_conn = to_comodule(m.conn);
    for (size_t i = 0; i < m.comod.dim(); ++i)
        for (size_t j = 0; j < m.comod.dim(); ++j)
            if (!(from_conn.coaction[i][j] == m.comod.coaction[i][j]))
                throw StructureError("build_polylog: connection and coaction disagree at (" +
                                     m.comod.basis[i].name + ", " + m.comod.basis[j].name + ")");
    return m;
}

ExtensionReport check_extension_structure(const PolylogMotive& m) {
    ExtensionReport rep;
    const int k = m.k;
    const auto& co = m.comod.coaction;
    const size_t n = m.comod.dim();

    // (i) Delta of e_{-1}..e_{-k} must not hit e_0.
    rep.sub_ok = true;
    for (size_t j = 1; j < n; ++j)
        if (!co[j][0].is_zero())
            rep.sub_ok = false;

    // (ii) The induced coaction on the quotient line e_0 is trivial of
    // Adams degree 0.
    rep.quotient_ok = co[0][0] == BarElement::unit_word() && m.comod.basis[0].adams == 0;

    // (iii) Diagonal isomorphism with Sym^{k-1}([a])(1). Solve
    //   lambda_j * sym_entry(j-1, t-1) == lambda_t * sub_entry(j, t)
    // with lambda_1 = 1 and check global consistency.
    Comodule target = twist(sym_power_kummer(m.a, k - 1), 1);
    std::vector<Rat> lambda(static_cast<size_t>(k) + 1, Rat(0));
    lambda[1] = 1;
    rep.iso_ok = true;
    for (int t = 2; t <= k && rep.iso_ok; ++t) {
        // propagate along the first superdiagonal chain
        const BarElement& sub_e = co[static_cast<size_t>(t - 1)][static_cast<size_t>(t)];
        const BarElement& tgt_e = target.coaction[static_cast<size_t>(t - 2)][static_cast<size_t>(t - 1)];
        if (sub_e.is_zero() || tgt_e.is_zero()) {
            rep.iso_ok = false;
            rep.detail = "missing superdiagonal entry at t=" + std::to_string(t);
            break;
        }
        // both entries are rational multiples of the same single word
        const auto& [ws, cs] = *sub_e.terms().begin();
        const auto& [wt, ct] = *tgt_e.terms().begin();
        if (sub_e.terms().size() != 1 || tgt_e.terms().size() != 1 || !(ws == wt)) {
            rep.iso_ok = false;
            rep.detail = "superdiagonal entries are not proportional at t=" + std::to_string(t);
            break;
        }
        lambda[static_cast<size_t>(t)] = lambda[static_cast<size_t>(t - 1)] * ct / cs;
    }
    if (rep.iso_ok) {
        for (int j = 1; j <= k && rep.iso_ok; ++j)
            for (int t = j; t <= k && rep.iso_ok; ++t) {
                BarElement lhs = co[static_cast<size_t>(j)][static_cast<size_t>(t)] *
                                 lambda[static_cast<size_t>(t)];
                BarElement rhs =
                    target.coaction[static_cast<size_t>(j - 1)][static_cast<size_t>(t - 1)] *
                    lambda[static_cast<size_t>(j)];
                if (!(lhs == rhs)) {
                    rep.iso_ok = false;
                    std::ostringstream os;
                    os << "coaction mismatch at (" << j << ", " << t << ")";
                    rep.detail = os.str();
                }
            }
        // also require matching Adams degrees
        for (int j = 1; j <= k && rep.iso_ok; ++j)
            if (m.comod.basis[static_cast<size_t>(j)].adams !=
                target.basis[static_cast<size_t>(j - 1)].adams) {
                rep.iso_ok = false;
                rep.detail = "Adams degree mismatch in the sub-comodule";
            }
    }
    if (rep.iso_ok)
        rep.scaling.assign(lambda.begin() + 1, lambda.end());
    return rep;
}

} // namespace motivic
