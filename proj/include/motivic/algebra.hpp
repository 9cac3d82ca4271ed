#pragma once

#include "motivic/field_value.hpp"

#include <map>
#include <string>
#include <vector>

namespace motivic {

// Bidegree of an element: adams is the weight index r, coh the cohomological
// degree i. Generators sit in (r, 1); the differential maps (r, i) to (r, i+1).
struct Bidegree {
    int adams = 0;
    int coh = 0;

    friend bool operator==(const Bidegree&, const Bidegree&) = default;
    Bidegree operator+(const Bidegree& o) const { return {adams + o.adams, coh + o.coh}; }
};

// Free generators of the cycle algebra:
//   Unit(u)  - the point cycle (u), u outside {0,1}, bidegree (1,1);
//   Rho(k,a) - the codimension-k polylog cycle, k >= 2, bidegree (k,1).
// Rho(1,a) is identified with Unit(1-a) at construction, so a stored
// generator with kind Rho always has k >= 2.
struct Generator {
    enum class Kind { Unit, Rho };
    Kind kind = Kind::Unit;
    int k = 1;
    FieldValue arg;

    Bidegree bidegree() const { return {k, 1}; }
    std::string str() const;
};

int compare(const Generator& x, const Generator& y);
inline bool operator==(const Generator& x, const Generator& y) { return compare(x, y) == 0; }
inline bool operator<(const Generator& x, const Generator& y) { return compare(x, y) < 0; }

Generator unit_gen(const FieldValue& u);         // requires u outside {0,1}
Generator rho_gen(int k, const FieldValue& a);   // k >= 1, a outside {0,1}

// A monomial is a strictly increasing product of generators. All generators
// have odd cohomological degree, so a repeated generator kills the monomial
// and reordering contributes the sign of the permutation.
struct Monomial {
    std::vector<Generator> gens;

    Bidegree bidegree() const;
    bool empty() const { return gens.empty(); }
    std::string str() const;
};

int compare(const Monomial& x, const Monomial& y);
inline bool operator==(const Monomial& x, const Monomial& y) { return compare(x, y) == 0; }
inline bool operator<(const Monomial& x, const Monomial& y) { return compare(x, y) < 0; }

// Element of the free Adams-graded graded-commutative dga over Q:
// a finite rational combination of monomials, canonically sorted,
// with no zero coefficients stored.
class CdgaElement {
public:
    CdgaElement() = default;

    static CdgaElement zero() { return {}; }
    static CdgaElement one();
    static CdgaElement from_gen(const Generator& g);
    static CdgaElement from_monomial(Monomial m, Rat coeff = 1);

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Homogeneity helpers: the bidegree of the unique graded piece, or
    // throws if the element mixes bidegrees / is zero.
    bool is_homogeneous() const;
    Bidegree bidegree() const;

    CdgaElement& operator+=(const CdgaElement& o);
    CdgaElement& operator-=(const CdgaElement& o);
    CdgaElement& operator*=(const Rat& c);
    friend CdgaElement operator+(CdgaElement a, const CdgaElement& b) { return a += b; }
    friend CdgaElement operator-(CdgaElement a, const CdgaElement& b) { return a -= b; }
    friend CdgaElement operator*(CdgaElement a, const Rat& c) { return a *= c; }
    friend CdgaElement operator*(const Rat& c, CdgaElement a) { return a *= c; }
    friend CdgaElement operator-(CdgaElement a) { return a *= Rat(-1); }
    friend bool operator==(const CdgaElement& a, const CdgaElement& b) { return a.terms_ == b.terms_; }

    // Graded-commutative product with Koszul signs.
    friend CdgaElement operator*(const CdgaElement& a, const CdgaElement& b);

    void add_term(Monomial m, Rat coeff);
    std::string str() const;

private:
    std::map<Monomial, Rat> terms_;
};

// Convenience constructors used throughout: (u) and rho_k(a) as elements.
CdgaElement unit_elt(const FieldValue& u);
CdgaElement rho_elt(int k, const FieldValue& a);

// The differential: d(Unit) = 0, d(Rho(k,a)) = -(a)*Rho(k-1,a), extended by
// linearity and the graded Leibniz rule.
CdgaElement differential(const CdgaElement& z);

// Augmentation: the coefficient of the empty monomial.
Rat augmentation(const CdgaElement& z);

// Product of two monomials as an element (zero or one signed monomial).
CdgaElement monomial_product(const Monomial& x, const Monomial& y);

} // namespace motivic
