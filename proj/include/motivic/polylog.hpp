#pragma once

#include "motivic/connection.hpp"

namespace motivic {

// The weight-k polylog cocycle: [rho_k(a)] + [(a)|rho_{k-1}(a)] + ... +
// [(a)|...|(a)|rho_1(a)], a degree-0 cocycle of Adams degree k.
BarElement li_word(int k, const FieldValue& a);

// The rank-(k+1) polylog object, carried both as a flat connection and as
// the comodule it generates. The two are cross-validated on construction.
struct PolylogMotive {
    int k = 1;
    FieldValue a;
    Connection conn;
    Comodule comod;
};

PolylogMotive build_polylog(int k, const FieldValue& a);

struct ExtensionReport {
    bool sub_ok = false;      // span(e_{-1}..e_{-k}) is a sub-comodule
    bool quotient_ok = false; // the quotient is Q(0)
    bool iso_ok = false;      // sub matches Sym^{k-1}([a])(1) after rescaling
    std::vector<Rat> scaling; // diagonal factors, indexed by e_{-1}..e_{-k}
    std::string detail;

    bool all() const { return sub_ok && quotient_ok && iso_ok; }
};

// Verifies the extension structure: the span of e_{-1},...,e_{-k} is a
// sub-comodule, the quotient is Q(0), and the sub is isomorphic to
// Sym^{k-1}([a])(1) via a diagonal change of basis found by exact solving.
ExtensionReport check_extension_structure(const PolylogMotive& m);

} // namespace motivic
