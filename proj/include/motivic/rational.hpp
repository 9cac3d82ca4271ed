#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace motivic {

// Exact arbitrary-precision arithmetic. Every symbolic layer of the engine
// works over these types; floating point only enters in the numeric modules.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Parses "p/q", "p", or a plain decimal such as "0.75" (exactly, as p/10^e).
Rat parse_rational(const std::string& s);

std::string to_string(const Rat& q);

} // namespace motivic
