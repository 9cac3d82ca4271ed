#include "motivic/complex_hp.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

namespace motivic {

namespace {

thread_local unsigned g_requested_bits = 128;

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 2;
}

} // namespace

void set_working_precision(unsigned bits) {
    if (bits < kMinPrecisionBits)
        throw std::invalid_argument("set_working_precision: need at least 64 bits");
    g_requested_bits = bits;
    Real::default_precision(bits_to_digits10(bits + kGuardBits));
}

unsigned requested_precision_bits() { return g_requested_bits; }

Real pi_hp() { return boost::math::constants::pi<Real>(); }

Real rat_to_real(const Rat& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

std::string real_to_decimal(const Real& x) {
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(bits_to_digits10(g_requested_bits)) - 2) << x;
    return os.str();
}

ComplexHP& ComplexHP::operator+=(const ComplexHP& o) {
    re += o.re;
    im += o.im;
    return *this;
}

ComplexHP& ComplexHP::operator-=(const ComplexHP& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

ComplexHP& ComplexHP::operator*=(const ComplexHP& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

ComplexHP& ComplexHP::operator/=(const ComplexHP& o) {
    Real n = o.re * o.re + o.im * o.im;
    if (n == 0)
        throw std::domain_error("ComplexHP: division by zero");
    Real r = (re * o.re + im * o.im) / n;
    Real i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string ComplexHP::str() const {
    return "(" + real_to_decimal(re) + ", " + real_to_decimal(im) + ")";
}

Real abs_hp(const ComplexHP& z) {
    return sqrt(z.re * z.re + z.im * z.im);
}

ComplexHP pow_int(const ComplexHP& z, int n) {
    if (n < 0)
        return ComplexHP(Real(1)) / pow_int(z, -n);
    ComplexHP acc{Real(1)};
    for (int i = 0; i < n; ++i)
        acc *= z;
    return acc;
}

ComplexHP two_pi_i_pow(int j) {
    return pow_int(ComplexHP{Real(0), 2 * pi_hp()}, j);
}

ComplexHP log_principal(const ComplexHP& z) {
    Real n = z.re * z.re + z.im * z.im;
    if (n == 0)
        throw std::domain_error("log_principal: logarithm of zero");
    return {log(n) / 2, atan2(z.im, z.re)};
}

} // namespace motivic
