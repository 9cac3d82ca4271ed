#include "motivic/hodge.hpp"

#include <sstream>

namespace motivic {

namespace {

bool motive_chain_is_zero(const MotiveChain& v) {
    for (const auto& c : v)
        if (!c.is_zero())
            return false;
    return true;
}

std::string default_path_desc(const PathSpec* path) {
    return path ? "custom piecewise-linear path" : "straight segment from 1";
}

std::vector<std::string> betti_names(int k) {
    std::vector<std::string> names;
    names.push_back("Z_" + std::to_string(k));
    for (int j = 1; j <= k; ++j)
        names.push_back("L_" + std::to_string(j));
    return names;
}

std::vector<std::string> derham_names(int k, bool coaction_route) {
    std::vector<std::string> names;
    for (int j = 0; j <= k; ++j) {
        std::string base = "e" + std::to_string(-j);
        names.push_back(coaction_route ? "Delta(" + base + ")" : base);
    }
    return names;
}

} // namespace

PeriodMatrix period_matrix_psi(int k, const Rat& a, const PathSpec* path, unsigned prec_bits) {
    if (a == 0 || a == 1)
        throw std::domain_error("period_matrix_psi: a must avoid {0,1}");
    set_working_precision(prec_bits);

    PolylogMotive m = build_polylog(k, FieldValue::symbol("a"));
    ZLBasis zl = z_and_l_elements(k, "a");

    // exact cocycle verification under the twisted differential
    std::vector<const MotiveChain*> cocycles;
    cocycles.push_back(&zl.z);
    for (const auto& l : zl.ell)
        cocycles.push_back(&l);
    for (const auto* x : cocycles)
        if (!motive_chain_is_zero(motive_d(m.conn, *x)))
            throw std::logic_error("period_matrix_psi: Betti class is not a cocycle");

    EvalContext ctx = single_binding("a", a, path);

    PeriodMatrix out;
    out.k = k;
    out.a = a;
    out.prec_bits = prec_bits;
    out.route = "connection";
    out.path_desc = default_path_desc(path);
    out.betti_basis = betti_names(k);
    out.derham_basis = derham_names(k, false);
    for (int j = 0; j <= k; ++j)
        out.weights.push_back(-2 * j);
    out.entries.assign(static_cast<size_t>(k) + 1,
                       std::vector<ComplexHP>(static_cast<size_t>(k) + 1));
    for (size_t col = 0; col < cocycles.size(); ++col)
        for (int t = 0; t <= k; ++t) {
            const ChainElement& comp = (*cocycles[col])[static_cast<size_t>(t)];
            out.entries[static_cast<size_t>(t)][col] =
                two_pi_i_pow(t) * I_map(comp, ctx);
        }
    return out;
}

PhiResult period_matrix_phi(int k, const Rat& a, const PathSpec* path, unsigned prec_bits) {
    if (a == 0 || a == 1)
        throw std::domain_error("period_matrix_phi: a must avoid {0,1}");
    set_working_precision(prec_bits);

    PolylogMotive m = build_polylog(k, FieldValue::symbol("a"));
    ZLBasis zl = z_and_l_elements(k, "a");
    EvalContext ctx = single_binding("a", a, path);
    const size_t n = m.comod.dim();

    std::vector<const MotiveChain*> cocycles;
    cocycles.push_back(&zl.z);
    for (const auto& l : zl.ell)
        cocycles.push_back(&l);

    PhiResult res;
    PeriodMatrix& out = res.matrix;
    out.k = k;
    out.a = a;
    out.prec_bits = prec_bits;
    out.route = "comodule";
    out.path_desc = default_path_desc(path);
    out.betti_basis = betti_names(k);
    out.derham_basis = derham_names(k, true);
    for (int j = 0; j <= k; ++j)
        out.weights.push_back(-2 * j);
    out.entries.assign(n, std::vector<ComplexHP>(n));

    for (size_t col = 0; col < cocycles.size(); ++col) {
        const MotiveChain& x = *cocycles[col];

        // Coaction expansion of the class, as a sanity-checkable element of
        // M (x) B(N, AC): component p collects words from row t of the
        // coaction, right-extended by the chain component t.
        std::vector<BarChainElement> expanded(n);
        for (size_t t = 0; t < n; ++t) {
            if (x[t].is_zero())
                continue;
            for (size_t p = 0; p < n; ++p)
                for (const auto& [w, cw] : m.comod.coaction[t][p].terms())
                    for (const auto& [s, z] : x[t].terms())
                        expanded[p].add_term(w, s, z * cw);
        }
        for (size_t p = 0; p < n; ++p)
            if (!bar_chain_d(expanded[p]).is_zero())
                throw std::logic_error("period_matrix_phi: expanded class is not a bar cocycle");

        // Comparison: a term e_{-p} (x) [w] gamma maps to
        // (2 pi i)^p (2 pi i)^{-adams(w)} I(gamma) on the word w.
        std::map<std::pair<size_t, BarWord>, ComplexHP> cvals;
        for (size_t p = 0; p < n; ++p)
            for (const auto& [key, z] : expanded[p].terms()) {
                ComplexHP v = two_pi_i_pow(static_cast<int>(p)) *
                              two_pi_i_pow(-key.word.adams_degree()) *
                              I_map(ChainElement::from_symbol(key.chain, z), ctx);
                auto slot = std::make_pair(p, key.word);
                auto it = cvals.find(slot);
                if (it == cvals.end())
                    cvals.emplace(std::move(slot), v);
                else
                    it->second += v;
            }

        // The de Rham basis vectors Delta(e_{-t}) have the unit word exactly
        // on their own row, so the unit-word components are the coordinates;
        // every other word component is an overdetermined consistency check.
        std::vector<ComplexHP> lambda(n);
        for (size_t t = 0; t < n; ++t) {
            auto it = cvals.find(std::make_pair(t, BarWord{}));
            lambda[t] = it == cvals.end() ? ComplexHP{Real(0)} : it->second;
        }
        std::map<std::pair<size_t, BarWord>, ComplexHP> predicted;
        for (size_t t = 0; t < n; ++t)
            for (size_t p = 0; p < n; ++p)
                for (const auto& [w, cw] : m.comod.coaction[t][p].terms()) {
                    auto slot = std::make_pair(p, w);
                    ComplexHP v = lambda[t] * ComplexHP{rat_to_real(cw)};
                    auto it = predicted.find(slot);
                    if (it == predicted.end())
                        predicted.emplace(std::move(slot), v);
                    else
                        it->second += v;
                }
        for (const auto& [slot, v] : cvals) {
            auto it = predicted.find(slot);
            ComplexHP want = it == predicted.end() ? ComplexHP{Real(0)} : it->second;
            Real r = abs_hp(v - want);
            if (r > res.consistency_residual)
                res.consistency_residual = r;
        }
        for (const auto& [slot, v] : predicted)
            if (!cvals.count(slot)) {
                Real r = abs_hp(v);
                if (r > res.consistency_residual)
                    res.consistency_residual = r;
            }

        for (size_t t = 0; t < n; ++t)
            out.entries[t][col] = lambda[t];
    }
    return res;
}

MthsReport check_mths(const PeriodMatrix& p, const Real& tol) {
    MthsReport rep;
    const size_t n = p.dim();

    rep.metadata_ok = p.weights.size() == n;
    for (size_t j = 0; j < n && rep.metadata_ok; ++j)
        if (p.weights[j] != -2 * static_cast<int>(j))
            rep.metadata_ok = false;
    if (!rep.metadata_ok)
        rep.issues.push_back("weight metadata is not (0,-2,...,-2k)");

    rep.triangular_ok = true;
    for (size_t t = 0; t < n; ++t)
        for (size_t j = t + 1; j < n; ++j)
            if (abs_hp(p.entries[t][j]) > tol) {
                rep.triangular_ok = false;
                rep.issues.push_back("entry above the diagonal at row " + std::to_string(t) +
                                     ", column " + std::to_string(j));
            }

    rep.diagonal_ok = true;
    rep.graded_twist_ok = true;
    for (size_t j = 0; j < n; ++j) {
        const ComplexHP expect = two_pi_i_pow(static_cast<int>(j));
        const Real scale = abs_hp(expect);
        if (abs_hp(p.entries[j][j] - expect) > tol * (scale > 1 ? scale : Real(1))) {
            rep.diagonal_ok = false;
            rep.issues.push_back("diagonal entry at row " + std::to_string(j) +
                                 " is not (2 pi i)^" + std::to_string(j));
        }
        // the induced map on the weight -2j graded piece must be the scalar
        // (2 pi i)^{-j} twist, i.e. the diagonal ratio must be 1
        ComplexHP ratio = p.entries[j][j] / expect;
        if (abs_hp(ratio - ComplexHP{Real(1)}) > tol) {
            rep.graded_twist_ok = false;
            rep.issues.push_back("graded comparison at weight " + std::to_string(-2 * (int)j) +
                                 " is not the scalar twist");
        }
        rep.graded_types.push_back("(" + std::to_string(-(int)j) + "," + std::to_string(-(int)j) +
                                   ")");
    }
    return rep;
}

TensorReport tensor_check(const Rat& a, const Rat& b, unsigned prec_bits, const Real& tol) {
    set_working_precision(prec_bits);
    TensorReport rep;

    PolylogMotive ma = build_polylog(1, FieldValue::symbol("a"));
    PolylogMotive mb = build_polylog(1, FieldValue::symbol("b"));
    ZLBasis za = z_and_l_elements(1, "a");
    ZLBasis zb = z_and_l_elements(1, "b");

    // tensor connection on the lexicographic pair basis
    const size_t na = 2, nb = 2;
    std::vector<BasisVector> basis;
    for (size_t i = 0; i < na; ++i)
        for (size_t p = 0; p < nb; ++p)
            basis.push_back({ma.conn.basis[i].name + "(x)" + mb.conn.basis[p].name,
                             ma.conn.basis[i].adams + mb.conn.basis[p].adams});
    std::vector<std::vector<CdgaElement>> gamma(na * nb, std::vector<CdgaElement>(na * nb));
    for (size_t i = 0; i < na; ++i)
        for (size_t p = 0; p < nb; ++p)
            for (size_t j = 0; j < na; ++j)
                for (size_t q = 0; q < nb; ++q) {
                    CdgaElement e;
                    if (p == q)
                        e += ma.conn.gamma[i][j];
                    if (i == j)
                        e += mb.conn.gamma[p][q];
                    gamma[i * nb + p][j * nb + q] = std::move(e);
                }
    Connection tensor_conn = make_connection(std::move(basis), std::move(gamma));
    if (!check_flat(tensor_conn))
        throw std::logic_error("tensor_check: tensor connection is not flat");
    rep.axioms_ok = check_axioms(tensor(ma.comod, mb.comod)).all();

    // Betti classes T(u (x) v): componentwise composition products.
    std::vector<const MotiveChain*> ua{&za.z, &za.ell[0]};
    std::vector<const MotiveChain*> ub{&zb.z, &zb.ell[0]};
    EvalContext ctx = single_binding("a", a);
    EvalContext ctxb = single_binding("b", b);
    ctx.insert(ctxb.begin(), ctxb.end());

    PeriodMatrix& direct = rep.direct;
    direct.k = 1;
    direct.a = a;
    direct.prec_bits = prec_bits;
    direct.route = "tensor";
    direct.path_desc = "straight segments from 1";
    direct.entries.assign(na * nb, std::vector<ComplexHP>(na * nb));
    for (size_t i = 0; i < na; ++i)
        for (size_t p = 0; p < nb; ++p) {
            direct.derham_basis.push_back("e" + std::to_string(-(int)i) + "(x)f" +
                                          std::to_string(-(int)p));
            direct.weights.push_back(-2 * static_cast<int>(i + p));
        }
    for (size_t ca = 0; ca < 2; ++ca)
        for (size_t cb = 0; cb < 2; ++cb) {
            MotiveChain t(na * nb, ChainElement::zero());
            for (size_t i = 0; i < na; ++i)
                for (size_t p = 0; p < nb; ++p)
                    t[i * nb + p] = circ((*ua[ca])[i], (*ub[cb])[p]);
            if (!motive_chain_is_zero(motive_d(tensor_conn, t)))
                throw std::logic_error("tensor_check: tensor class is not a cocycle");
            direct.betti_basis.push_back((ca == 0 ? "Z(a)" : "L(a)") +
                                         std::string("(x)") + (cb == 0 ? "Z(b)" : "L(b)"));
            const size_t col = ca * 2 + cb;
            for (size_t i = 0; i < na; ++i)
                for (size_t p = 0; p < nb; ++p)
                    direct.entries[i * nb + p][col] =
                        two_pi_i_pow(static_cast<int>(i + p)) * I_map(t[i * nb + p], ctx);
        }

    // Kronecker oracle from the rank-one matrices.
    PeriodMatrix pa = period_matrix_psi(1, a, nullptr, prec_bits);
    PeriodMatrix pb = period_matrix_psi(1, b, nullptr, prec_bits);
    for (size_t i = 0; i < na; ++i)
        for (size_t p = 0; p < nb; ++p)
            for (size_t ca = 0; ca < 2; ++ca)
                for (size_t cb = 0; cb < 2; ++cb) {
                    ComplexHP want = pa.entries[i][ca] * pb.entries[p][cb];
                    Real err = abs_hp(direct.entries[i * nb + p][ca * 2 + cb] - want);
                    if (err > rep.max_error)
                        rep.max_error = err;
                }
    rep.pass = rep.axioms_ok && rep.max_error <= tol;
    return rep;
}

RegulatorReport regulator_r1(const Rat& u, unsigned prec_bits) {
    if (!(u > 0 && u < 1))
        throw std::domain_error("regulator_r1: u must lie in (0,1)");
    set_working_precision(prec_bits);
    const Rat a = Rat(1) - u; // the object [u] is the polylog motive at a = 1-u
    PeriodMatrix p = period_matrix_psi(1, a, nullptr, prec_bits);

    RegulatorReport rep;
    rep.extension_entry = p.entries[1][0]; // -Li_1(a) = log(1-a) = log u
    rep.direct_log = ComplexHP{log(rat_to_real(u))};
    ComplexHP diff = rep.extension_entry - rep.direct_log;
    const Real two_pi = 2 * pi_hp();
    Real mult = diff.im / two_pi;
    // reduce by the nearest integer multiple of 2 pi i
    long rounded = static_cast<long>(boost::multiprecision::round(mult).convert_to<long>());
    rep.two_pi_i_multiple = rounded;
    diff -= ComplexHP{Real(0), two_pi * rounded};
    rep.residual = abs_hp(diff);
    return rep;
}

} // namespace motivic
