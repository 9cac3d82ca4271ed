#pragma once

#include "motivic/rational.hpp"

#include <compare>
#include <string>

namespace motivic {

// A tag for an element of the base field F appearing as a generator argument.
// Three forms arise: an exact rational, a named symbol bound to a complex
// embedding value only at numeric time, and 1-minus-a-symbol (closed under
// u -> 1-u, which is all the cycle constructions need).
enum class FieldKind { Rational, Sym, OneMinusSym };

struct FieldValue {
    FieldKind kind = FieldKind::Rational;
    Rat q;           // Rational only
    std::string sym; // Sym / OneMinusSym only

    static FieldValue rational(Rat v);
    static FieldValue symbol(std::string name);
    static FieldValue one_minus_symbol(std::string name);

    bool is_zero() const { return kind == FieldKind::Rational && q == 0; }
    bool is_one() const { return kind == FieldKind::Rational && q == 1; }

    std::string str() const;
};

// 1 - u within the grammar: rationals stay rational, Sym <-> OneMinusSym.
FieldValue one_minus(const FieldValue& u);

int compare(const FieldValue& x, const FieldValue& y);
inline bool operator==(const FieldValue& x, const FieldValue& y) { return compare(x, y) == 0; }
inline bool operator!=(const FieldValue& x, const FieldValue& y) { return compare(x, y) != 0; }
inline bool operator<(const FieldValue& x, const FieldValue& y) { return compare(x, y) < 0; }

// True when rational a and 1-a are multiplicatively dependent over Q
// (detected by integer factorization of numerators/denominators).
// Symbolic tags are treated as independent and return false.
bool mult_dependent_with_one_minus(const FieldValue& a);

} // namespace motivic
