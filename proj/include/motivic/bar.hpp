#pragma once

#include "motivic/algebra.hpp"

#include <utility>

namespace motivic {

// Reduced bar complex B(N) = B(Q, N, Q) over the cycle algebra. A word
// [a_1|...|a_s] has monomial letters of positive Adams degree; elements are
// rational combinations of words. The bar degree of a word is
// sum(coh(a_i)) - s, and its Adams degree is sum(adams(a_i)).
//
// Words with a chain-module right slot (B(N, AC)) live in chains.hpp; only
// the trivial-module configuration is needed here.
struct BarWord {
    std::vector<Monomial> letters;

    int bar_degree() const;
    int adams_degree() const;
    std::string str() const;
};

int compare(const BarWord& x, const BarWord& y);
inline bool operator==(const BarWord& x, const BarWord& y) { return compare(x, y) == 0; }
inline bool operator<(const BarWord& x, const BarWord& y) { return compare(x, y) < 0; }

class BarElement {
public:
    BarElement() = default;

    static BarElement zero() { return {}; }
    static BarElement unit_word(); // []
    // Multilinear expansion of a word whose letters are given as elements.
    // Throws if a letter has an Adams-degree-0 component (not in N_+).
    static BarElement word(const std::vector<CdgaElement>& letters);
    static BarElement from_word(BarWord w, Rat coeff = 1);

    const std::map<BarWord, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous_degree(int deg) const;
    bool is_homogeneous_adams() const;
    int adams_degree() const; // throws on mixed/zero

    BarElement& operator+=(const BarElement& o);
    BarElement& operator-=(const BarElement& o);
    BarElement& operator*=(const Rat& c);
    friend BarElement operator+(BarElement a, const BarElement& b) { return a += b; }
    friend BarElement operator-(BarElement a, const BarElement& b) { return a -= b; }
    friend BarElement operator*(BarElement a, const Rat& c) { return a *= c; }
    friend BarElement operator*(const Rat& c, BarElement a) { return a *= c; }
    friend BarElement operator-(BarElement a) { return a *= Rat(-1); }
    friend bool operator==(const BarElement& a, const BarElement& b) { return a.terms_ == b.terms_; }

    void add_term(BarWord w, Rat coeff);
    std::string str() const;

private:
    std::map<BarWord, Rat> terms_;
};

// Internal differential: letters hit by d with the sign (-1)^i after twisting
// the preceding letters by J(a) = (-1)^{deg a} a. The module boundary terms
// vanish here because Q acts through the augmentation and letters have
// positive Adams degree.
BarElement bar_d_internal(const BarElement& x);

// External differential: contraction of adjacent letters (Ja_i) a_{i+1} with
// sign (-1)^{i+1}; the end terms are multiplied by the augmentation of the
// outermost letter and vanish on N_+.
BarElement bar_d_external(const BarElement& x);

inline BarElement bar_d(const BarElement& x) { return bar_d_internal(x) + bar_d_external(x); }

// Shuffle product. Koszul signs are computed on letter degrees shifted down
// by one, the standard convention for the bar construction.
BarElement shuffle(const BarElement& x, const BarElement& y);

BarElement shuffle_power(const BarElement& x, int n);

// Formal sum of word pairs; the value type of the deconcatenation coproduct.
class BarPairElement {
public:
    BarPairElement() = default;

    const std::map<std::pair<BarWord, BarWord>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BarPairElement& operator+=(const BarPairElement& o);
    BarPairElement& operator-=(const BarPairElement& o);
    friend BarPairElement operator+(BarPairElement a, const BarPairElement& b) { return a += b; }
    friend BarPairElement operator-(BarPairElement a, const BarPairElement& b) { return a -= b; }
    friend bool operator==(const BarPairElement& a, const BarPairElement& b) {
        return a.terms_ == b.terms_;
    }

    void add_term(BarWord l, BarWord r, Rat coeff);
    std::string str() const;

private:
    std::map<std::pair<BarWord, BarWord>, Rat> terms_;
};

// Deconcatenation at every cut point, including the empty ends.
BarPairElement coproduct(const BarElement& x);

// Tensor of two elements as a pair-sum, for comparing against coproducts.
BarPairElement tensor_pair(const BarElement& x, const BarElement& y);

// Counit: the coefficient of the empty word.
Rat counit(const BarElement& x);

// True iff bar_d(x) == 0. Requires x homogeneous of bar degree 0.
bool is_cocycle(const BarElement& x);

} // namespace motivic
