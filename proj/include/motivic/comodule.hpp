#pragma once

#include "motivic/bar.hpp"
#include "motivic/linalg.hpp"

#include <string>
#include <vector>

namespace motivic {

struct BasisVector {
    std::string name;
    int adams = 0;
};

// Finite-dimensional Adams-graded right comodule over the degree-0 bar
// cohomology Hopf algebra. Delta(v_i) = sum_j v_j (x) coaction[i][j]; the
// entry (i,j) is a degree-0 bar cocycle of Adams degree adams(i) - adams(j),
// the diagonal is the unit word, and entries with non-positive Adams gap
// vanish off the diagonal.
struct Comodule {
    std::vector<BasisVector> basis;
    std::vector<std::vector<BarElement>> coaction;

    size_t dim() const { return basis.size(); }
};

// Thrown when a coaction entry fails a structural precondition (for
// instance, it is not a cocycle); names the offending entry.
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AxiomReport {
    bool degree_ok = false;
    bool coassoc_ok = false;
    bool counit_ok = false;
    std::vector<std::string> issues;

    bool all() const { return degree_ok && coassoc_ok && counit_ok; }
};

// Checks the coaction axioms: Adams-degree compatibility, coassociativity
// (comparing the deconcatenation coproduct of each entry with the matrix
// convolution of entries), and counitarity. Entries must be cocycles.
AxiomReport check_axioms(const Comodule& v);

struct KernelReport {
    int kernel_dim = 0;
    bool equals_image = false;
    int span_dim = 0; // dimension of the word span the kernel was computed in
};

// Kernel of Delta_V (x) id - id (x) Delta inside V (x) S, where S is the
// smallest word span containing the coaction entries and closed under
// deconcatenation components. Exact rational elimination throughout.
KernelReport kernel_identity(const Comodule& v);

// Tensor product: basis pairs, Adams degrees add, entries multiply under the
// shuffle product.
Comodule tensor(const Comodule& v, const Comodule& w);

// The Tate object Q(r): one basis vector of Adams degree -r, trivial coaction.
Comodule tate(int r);

// The Kummer object [u]: rank two, coaction of the top vector hits [(u)].
Comodule kummer(const FieldValue& u);

// V(r) = V tensor Q(r).
Comodule twist(const Comodule& v, int r);

// Sym^m of the Kummer object [u], coaction entries built from shuffle powers
// of [(u)].
Comodule sym_power_kummer(const FieldValue& u, int m);

} // namespace motivic
