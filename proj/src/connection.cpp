#include "motivic/connection.hpp"

namespace motivic {

Connection make_connection(std::vector<BasisVector> basis,
                           std::vector<std::vector<CdgaElement>> gamma) {
    Connection c;
    c.basis = std::move(basis);
    c.gamma = std::move(gamma);
    const size_t n = c.dim();
    if (c.gamma.size() != n)
        throw StructureError("make_connection: matrix size mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (c.gamma[i].size() != n)
            throw StructureError("make_connection: matrix is not square");
        for (size_t j = 0; j < n; ++j) {
            const auto& e = c.gamma[i][j];
            if (e.is_zero())
                continue;
            const int gap = c.basis[i].adams - c.basis[j].adams;
            for (const auto& [m, coeff] : e.terms()) {
                const Bidegree d = m.bidegree();
                if (d.coh != 1)
                    throw StructureError("make_connection: entry (" + c.basis[i].name + ", " +
                                         c.basis[j].name + ") not of cohomological degree 1");
                if (d.adams != gap)
                    throw StructureError("make_connection: entry (" + c.basis[i].name + ", " +
                                         c.basis[j].name + ") breaks the Adams-degree-0 rule");
            }
        }
    }
    return c;
}

bool check_flat(const Connection& c) {
    const size_t n = c.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < n; ++l) {
            CdgaElement acc = differential(c.gamma[i][l]);
            for (size_t j = 0; j < n; ++j)
                acc += c.gamma[j][l] * c.gamma[i][j];
            if (!acc.is_zero())
                return false;
        }
    return true;
}

std::vector<std::pair<size_t, size_t>> validate_degrees(const std::vector<BasisVector>& basis) {
    std::vector<std::pair<size_t, size_t>> slots;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (basis[i].adams - basis[j].adams >= 1)
                slots.emplace_back(i, j);
    return slots;
}

Comodule to_comodule(const Connection& c) {
    if (!check_flat(c))
        throw StructureError("to_comodule: connection is not flat");
    const size_t n = c.dim();
    Comodule out;
    out.basis = c.basis;
    out.coaction.assign(n, std::vector<BarElement>(n));

    // Delta = sum of Gamma iterates. The entries strictly drop Adams degree,
    // so iteration stops after at most the maximal Adams gap many steps.
    // Step words accumulate on the left: i -> j -> l yields [g_jl | g_ij].
    std::vector<std::vector<BarElement>> cur(n, std::vector<BarElement>(n));
    for (size_t i = 0; i < n; ++i) {
        cur[i][i] = BarElement::unit_word();
        out.coaction[i][i] = BarElement::unit_word();
    }
    for (size_t step = 0; step < n; ++step) {
        std::vector<std::vector<BarElement>> next(n, std::vector<BarElement>(n));
        bool any = false;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (cur[i][j].is_zero())
                    continue;
                for (size_t l = 0; l < n; ++l) {
                    const auto& step_elt = c.gamma[j][l];
                    if (step_elt.is_zero())
                        continue;
                    for (const auto& [w, cw] : cur[i][j].terms())
                        for (const auto& [m, cm] : step_elt.terms()) {
                            BarWord nw;
                            nw.letters.reserve(w.letters.size() + 1);
                            nw.letters.push_back(m);
                            nw.letters.insert(nw.letters.end(), w.letters.begin(),
                                              w.letters.end());
                            next[i][l].add_term(std::move(nw), cw * cm);
                            any = true;
                        }
                }
            }
        if (!any)
            break;
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l)
                out.coaction[i][l] += next[i][l];
        cur = std::move(next);
    }
    return out;
}

} // namespace motivic
