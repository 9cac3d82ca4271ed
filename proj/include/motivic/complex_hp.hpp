#pragma once

#include "motivic/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace motivic {

// Variable-precision real arithmetic (MPFR-backed). All numeric work runs at
// the configured precision plus guard bits and is rounded once on output.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kGuardBits = 32;
inline constexpr unsigned kMinPrecisionBits = 64;

// Sets the working precision for the calling thread to bits + guard.
void set_working_precision(unsigned bits);
unsigned requested_precision_bits();

Real pi_hp();
Real rat_to_real(const Rat& q);

// Decimal string at the *requested* precision (the single output rounding).
std::string real_to_decimal(const Real& x);

struct ComplexHP {
    Real re = 0;
    Real im = 0;

    ComplexHP() = default;
    ComplexHP(Real r) : re(std::move(r)) {}
    ComplexHP(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    ComplexHP(int r) : re(r) {}

    ComplexHP& operator+=(const ComplexHP& o);
    ComplexHP& operator-=(const ComplexHP& o);
    ComplexHP& operator*=(const ComplexHP& o);
    ComplexHP& operator/=(const ComplexHP& o);
    friend ComplexHP operator+(ComplexHP a, const ComplexHP& b) { return a += b; }
    friend ComplexHP operator-(ComplexHP a, const ComplexHP& b) { return a -= b; }
    friend ComplexHP operator*(ComplexHP a, const ComplexHP& b) { return a *= b; }
    friend ComplexHP operator/(ComplexHP a, const ComplexHP& b) { return a /= b; }
    friend ComplexHP operator-(const ComplexHP& a) { return {-a.re, -a.im}; }

    std::string str() const;
};

Real abs_hp(const ComplexHP& z);
ComplexHP pow_int(const ComplexHP& z, int n);

// (2 pi i)^j
ComplexHP two_pi_i_pow(int j);

// Principal logarithm (branch cut on the negative reals).
ComplexHP log_principal(const ComplexHP& z);

} // namespace motivic
