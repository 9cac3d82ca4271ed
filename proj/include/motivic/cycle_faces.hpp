#pragma once

#include "motivic/field_value.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace motivic {

// Symbolic model of parametrized cycles over the cube. Coordinates live in a
// small grammar: monomials c * prod x_i^{e_i} and 1 - (such a monomial),
// with c = q * s^p for a rational q and at most one field symbol s. The
// polylog cycles and every face they generate stay inside this grammar.

// c = q * sym^spow; sym is empty iff spow == 0, and q is never zero.
struct CycCoef {
    Rat q = 1;
    std::string sym;
    int spow = 0;
};

struct CycMono {
    CycCoef c;
    std::vector<std::pair<int, int>> expo; // (param, exponent), sorted, exponent != 0

    bool is_const() const { return expo.empty(); }
};

// A single cubical coordinate. Special values appear transiently while a
// face is being resolved; canonical stored cycles carry none.
struct CoordExpr {
    enum class Special { None, Zero, One, Inf };
    Special special = Special::None;
    bool one_minus = false; // the coordinate is 1 - m rather than m
    CycMono m;

    std::string str() const;
};

using CoordTuple = std::vector<CoordExpr>;

int compare(const CoordExpr& x, const CoordExpr& y);
inline bool operator==(const CoordExpr& x, const CoordExpr& y) { return compare(x, y) == 0; }
inline bool operator<(const CoordExpr& x, const CoordExpr& y) { return compare(x, y) < 0; }

// Raised when a face intersection cannot be resolved inside the grammar
// (multi-parameter degenerations, coordinates pinned at 0 or infinity).
// Such cases signal non-properness and are reported, never guessed.
struct UnresolvedFaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A formal rational combination of alternating cycles, stored by canonical
// representative. Canonicalization minimizes the coordinate tuple over
// coordinate permutations, coordinate inversions that stay in the grammar,
// and parameter relabelings, tracking the character sign; representatives
// fixed by a sign-reversing move are zero.
class AltCycle {
public:
    explicit AltCycle(int ambient = 0) : ambient_(ambient) {}

    static AltCycle zero(int ambient) { return AltCycle(ambient); }

    int ambient() const { return ambient_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<CoordTuple, Rat>& terms() const { return terms_; }

    // Canonicalizes and accumulates one representative.
    void add_representative(const CoordTuple& coords, const Rat& coeff);

    AltCycle& operator+=(const AltCycle& o);
    friend AltCycle operator+(AltCycle a, const AltCycle& b) { return a += b; }
    AltCycle& operator*=(const Rat& c);
    friend AltCycle operator*(AltCycle a, const Rat& c) { return a *= c; }
    friend AltCycle operator*(const Rat& c, AltCycle a) { return a *= c; }
    friend AltCycle operator-(AltCycle a) { return a *= Rat(-1); }

    std::string str() const;

private:
    int ambient_ = 0;
    std::map<CoordTuple, Rat> terms_;
};

bool alt_equal(const AltCycle& a, const AltCycle& b);

// The codimension-1 point cycle (u), u outside {0,1}.
AltCycle unit_point_cycle(const FieldValue& u);

// Bloch's codimension-k cycle: (-1)^{k(k-1)/2} times the locus
// (x_1,...,x_{k-1}, 1-x_1, 1-x_2/x_1, ..., 1-a/x_{k-1}) in the (2k-1)-cube.
// Accepts a rational or a plain symbol for a.
AltCycle rho_cycle(int k, const FieldValue& a);

// Intersection with the cubical face z_i = alpha (i is 1-based, alpha is 0
// or infinity), resolved by solving the i-th coordinate equation for one
// parameter. Throws UnresolvedFaceError when the grammar cannot decide.
enum class FaceSide { Zero, Infinity };
AltCycle face(const AltCycle& c, int i, FaceSide alpha);

// The cubical differential: alternating signed sum of all faces.
AltCycle boundary(const AltCycle& c);

// Exterior product of cycles (parameters of the right factor are shifted).
AltCycle cycle_product(const AltCycle& a, const AltCycle& b);

// Number of parameters of a representative tuple.
int param_count(const CoordTuple& coords);

} // namespace motivic
