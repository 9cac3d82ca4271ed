#pragma once

#include "motivic/comodule.hpp"

namespace motivic {

// A connection Gamma : M -> M (x) A^1 of Adams degree 0 on a finite
// Adams-graded space. Gamma(v_i) = sum_j v_j (x) gamma[i][j]; nonzero
// entries are cohomological-degree-1 combinations of generators whose Adams
// degree equals adams(i) - adams(j).
//
// The basis is listed in filtration order, quotient first: admissible slots
// sit strictly below the listed diagonal.
struct Connection {
    std::vector<BasisVector> basis;
    std::vector<std::vector<CdgaElement>> gamma;

    // Set when the underlying field elements a and 1-a are multiplicatively
    // dependent over Q, which weakens the linear-independence assumption the
    // minimal-model surrogate rests on. Computations proceed regardless.
    bool dependence_warning = false;

    size_t dim() const { return basis.size(); }
};

// Validates entry degrees (throws StructureError on a violation).
Connection make_connection(std::vector<BasisVector> basis,
                           std::vector<std::vector<CdgaElement>> gamma);

// Flatness d(Gamma) + Gamma^2 = 0, checked entrywise with exact arithmetic.
bool check_flat(const Connection& c);

// Slots (i, j) that can carry a nonzero entry: i strictly before j in the
// listed (filtration) order and adams(i) - adams(j) >= 1, since generators
// have Adams degree >= 1. An empty result forces the zero connection.
std::vector<std::pair<size_t, size_t>> validate_degrees(const std::vector<BasisVector>& basis);

// Converts a flat connection into a comodule by iterating Gamma: the (i, j)
// coaction entry collects one bar word per path i -> ... -> j through the
// gamma matrix, later steps leftmost. Throws on a non-flat input.
Comodule to_comodule(const Connection& c);

} // namespace motivic
