#pragma once

#include "motivic/bar.hpp"
#include "motivic/connection.hpp"

namespace motivic {

// Formal model of the fragment of the admissible-chain complex the period
// computation needs. Primitive symbols:
//
//   Eta(k,i)   - the polylog chain in the (k+i)-cube, 0 <= i <= k-1;
//   Xi(k)      - the packaged tower sum_i Eta(k,i), the object the
//                differential acts on (the individual eta signs are folded
//                into this packaging);
//   PathPow(j) - the j-th composition power of the path from 1 to the
//                symbol's value, with PathPow(0) the unit chain.
//
// A chain symbol is an ordered composition product of primitives; a
// ChainElement is a combination of symbols with cycle-algebra coefficients
// (the module action of the cycle algebra on chains).
struct ChainPrim {
    enum class Kind { Eta, Xi, PathPow };
    Kind kind = Kind::Xi;
    std::string sym = "a"; // field-symbol tag the chain is built from
    int k = 0;             // Eta / Xi
    int idx = 0;           // Eta: the index i; PathPow: the power j

    // chain dimension (equal to the ambient index for these chains);
    // Xi mixes dimensions and reports none
    bool has_even_dim() const;
    std::string str() const;
};

int compare(const ChainPrim& x, const ChainPrim& y);
inline bool operator<(const ChainPrim& x, const ChainPrim& y) { return compare(x, y) < 0; }
inline bool operator==(const ChainPrim& x, const ChainPrim& y) { return compare(x, y) == 0; }

struct ChainSymbol {
    std::vector<ChainPrim> prims; // empty product is the unit chain

    bool is_unit() const { return prims.empty(); }
    std::string str() const;
};

int compare(const ChainSymbol& x, const ChainSymbol& y);
inline bool operator<(const ChainSymbol& x, const ChainSymbol& y) { return compare(x, y) < 0; }
inline bool operator==(const ChainSymbol& x, const ChainSymbol& y) { return compare(x, y) == 0; }

class ChainElement {
public:
    ChainElement() = default;

    static ChainElement zero() { return {}; }
    static ChainElement unit(); // the chain 1
    static ChainElement from_symbol(ChainSymbol s, CdgaElement coeff = CdgaElement::one());

    const std::map<ChainSymbol, CdgaElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ChainElement& operator+=(const ChainElement& o);
    ChainElement& operator-=(const ChainElement& o);
    ChainElement& operator*=(const Rat& c);
    friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }
    friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }
    friend ChainElement operator*(ChainElement a, const Rat& c) { return a *= c; }
    friend ChainElement operator*(const Rat& c, ChainElement a) { return a *= c; }
    friend ChainElement operator-(ChainElement a) { return a *= Rat(-1); }
    friend bool operator==(const ChainElement& a, const ChainElement& b) {
        return a.terms_ == b.terms_;
    }

    void add_term(ChainSymbol s, CdgaElement coeff);
    std::string str() const;

private:
    std::map<ChainSymbol, CdgaElement> terms_;
};

ChainElement eta(int k, int i, const std::string& sym = "a");
ChainElement xi(int k, const std::string& sym = "a"); // xi(0) = 0
ChainElement path_pow(int j, const std::string& sym = "a");

// The eta expansion of the packaged tower, for the integration map only.
ChainElement xi_eta_expansion(int k, const std::string& sym = "a");

// Module action of the cycle algebra: z * (w * S) = (z w) * S.
ChainElement cycle_mul(const CdgaElement& z, const ChainElement& x);

// Total differential on the closed rewrite system:
//   d Xi(k)      = -rho_k * 1 - (a) * Xi(k-1)
//   d PathPow(j) = -j (a) * PathPow(j-1)
// extended by d(z*gamma) = dz*gamma + (-1)^{coh z} z*d(gamma) and by the
// Leibniz rule over composition products. Bare Eta symbols are rejected:
// their individual signs are not pinned, only the packaged relation is.
ChainElement chain_d(const ChainElement& x);

// Composition product. Same-tag path powers compose additively; factors
// reorder under the sort key only across an even-dimensional neighbor,
// which is when graded commutativity applies.
ChainElement circ(const ChainElement& x, const ChainElement& y);

// An element of M (x) AC for a finite basis: one chain component per basis
// vector.
using MotiveChain = std::vector<ChainElement>;

// Twisted differential d_1 + d_2 of the Hodge complex of a connection.
MotiveChain motive_d(const Connection& c, const MotiveChain& v);

struct ZLBasis {
    MotiveChain z;                // Z_k = e_0 * 1 + sum_j e_{-j} * xi_j
    std::vector<MotiveChain> ell; // L_j = sum_{t>=j} e_{-t} * p^{o(t-j)}/(t-j)!
};

ZLBasis z_and_l_elements(int k, const std::string& sym = "a");

// Exact rank of a family of motive chains (as vectors over the symbol and
// monomial coordinates).
int motive_chain_rank(const std::vector<MotiveChain>& xs);

// ---------------------------------------------------------------------------
// Bar words with a chain right slot: the fragment of B(N, AC) the Hodge
// realization comparison runs through.

struct BarChainKey {
    BarWord word;
    ChainSymbol chain;
};

int compare(const BarChainKey& x, const BarChainKey& y);
inline bool operator<(const BarChainKey& x, const BarChainKey& y) { return compare(x, y) < 0; }
inline bool operator==(const BarChainKey& x, const BarChainKey& y) { return compare(x, y) == 0; }

class BarChainElement {
public:
    BarChainElement() = default;

    const std::map<BarChainKey, CdgaElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BarChainElement& operator+=(const BarChainElement& o);
    friend BarChainElement operator+(BarChainElement a, const BarChainElement& b) {
        return a += b;
    }
    friend bool operator==(const BarChainElement& a, const BarChainElement& b) {
        return a.terms_ == b.terms_;
    }

    void add_term(BarWord w, ChainSymbol s, CdgaElement coeff);
    std::string str() const;

private:
    std::map<BarChainKey, CdgaElement> terms_;
};

// Full bar differential d_I + d_E on B(N, AC): letters differentiate and
// contract as in the trivial-module case, the last letter may fall into the
// chain slot through the module action, and the slot differentiates with
// chain_d.
BarChainElement bar_chain_d(const BarChainElement& x);

} // namespace motivic
