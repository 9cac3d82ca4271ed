#pragma once

#include "motivic/periods.hpp"
#include "motivic/polylog.hpp"

namespace motivic {

// Period matrix of the polylog object: rows are the de Rham basis
// e_0,...,e_{-k} (weight -2j on row j), columns the Betti cocycles
// Z_k, L_1, ..., L_k. Lower-triangular with (2 pi i)^j on the diagonal.
struct PeriodMatrix {
    int k = 1;
    Rat a;
    unsigned prec_bits = 128;
    std::string route;     // which construction produced it
    std::string path_desc; // description of the integration path
    std::vector<std::string> betti_basis;
    std::vector<std::string> derham_basis;
    std::vector<int> weights; // per de Rham row
    std::vector<std::vector<ComplexHP>> entries;

    size_t dim() const { return entries.size(); }
};

// Direct route: the connection's Hodge complex. Each Betti cocycle is
// verified exactly against the twisted differential, then paired with the
// comparison map: entry(t, col) = (2 pi i)^t * I(component_t).
PeriodMatrix period_matrix_psi(int k, const Rat& a, const PathSpec* path, unsigned prec_bits);

// Comodule route: expand the Betti cocycles through the coaction into bar
// words with chain slots, apply the comparison twist per word, and solve for
// the coordinates in the de Rham basis of coaction rows. The overdetermined
// components must agree; the largest residual is reported.
struct PhiResult {
    PeriodMatrix matrix;
    Real consistency_residual = 0; // off-pivot components of the linear solve
};
PhiResult period_matrix_phi(int k, const Rat& a, const PathSpec* path, unsigned prec_bits);

struct MthsReport {
    bool metadata_ok = false;     // weights are -2j in order
    bool triangular_ok = false;   // vanishing above the diagonal
    bool diagonal_ok = false;     // (2 pi i)^j on the diagonal
    bool graded_twist_ok = false; // weight-graded comparison is the scalar twist
    std::vector<std::string> graded_types; // "(-j,-j)" per weight row
    std::vector<std::string> issues;

    bool pass() const { return metadata_ok && triangular_ok && diagonal_ok && graded_twist_ok; }
};

MthsReport check_mths(const PeriodMatrix& p, const Real& tol);

// Tensor compatibility at the rank-one polylog instance: the direct period
// matrix of M_1(a) (x) M_1(b) against the Kronecker product of the factors,
// in the lexicographic pair basis.
struct TensorReport {
    PeriodMatrix direct;
    Real max_error = 0;
    bool axioms_ok = false; // tensor comodule passes the coaction axioms
    bool pass = false;
};
TensorReport tensor_check(const Rat& a, const Rat& b, unsigned prec_bits, const Real& tol);

// Extension class of [u] against the direct logarithm, reduced modulo
// integer multiples of 2 pi i.
struct RegulatorReport {
    ComplexHP extension_entry; // the off-diagonal period
    ComplexHP direct_log;
    long two_pi_i_multiple = 0;
    Real residual = 0;
};
RegulatorReport regulator_r1(const Rat& u, unsigned prec_bits);

} // namespace motivic
