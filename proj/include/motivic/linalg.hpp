#pragma once

#include "motivic/rational.hpp"

#include <vector>

namespace motivic {

// Small dense exact linear algebra over Q. Matrices are row vectors of
// rationals; everything is elimination with exact pivots, so subspace
// comparisons are equalities, not tolerances.
using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;

// Reduced row echelon form in place; returns the rank.
int rref(RatMatrix& m);

int rank(RatMatrix m);

// Basis of the null space of a (rows x cols) matrix, one vector per row of
// the result, each of length cols.
RatMatrix kernel_basis(const RatMatrix& m, size_t cols);

// Row-space equality, tested via a common echelon form.
bool same_row_space(const RatMatrix& a, const RatMatrix& b);

} // namespace motivic
