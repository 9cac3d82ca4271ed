#include "motivic/field_value.hpp"

#include <map>
#include <vector>

namespace motivic {

Rat parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0)
            throw std::invalid_argument("parse_rational: zero denominator");
        return Rat(p, q);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos)
        return Rat(Int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("parse_rational: malformed decimal");
    Int p(digits);
    Int q = 1;
    for (size_t i = 0; i < frac_len; ++i)
        q *= 10;
    return Rat(p, q);
}

std::string to_string(const Rat& q) {
    return q.str();
}

FieldValue FieldValue::rational(Rat v) {
    FieldValue f;
    f.kind = FieldKind::Rational;
    f.q = std::move(v);
    return f;
}

FieldValue FieldValue::symbol(std::string name) {
    FieldValue f;
    f.kind = FieldKind::Sym;
    f.sym = std::move(name);
    return f;
}

FieldValue FieldValue::one_minus_symbol(std::string name) {
    FieldValue f;
    f.kind = FieldKind::OneMinusSym;
    f.sym = std::move(name);
    return f;
}

std::string FieldValue::str() const {
    switch (kind) {
    case FieldKind::Rational:
        return q.str();
    case FieldKind::Sym:
        return sym;
    case FieldKind::OneMinusSym:
        return "1-" + sym;
    }
    return "?";
}

FieldValue one_minus(const FieldValue& u) {
    switch (u.kind) {
    case FieldKind::Rational:
        return FieldValue::rational(Rat(1) - u.q);
    case FieldKind::Sym:
        return FieldValue::one_minus_symbol(u.sym);
    case FieldKind::OneMinusSym:
        return FieldValue::symbol(u.sym);
    }
    throw std::logic_error("one_minus: bad kind");
}

int compare(const FieldValue& x, const FieldValue& y) {
    if (x.kind != y.kind)
        return static_cast<int>(x.kind) < static_cast<int>(y.kind) ? -1 : 1;
    if (x.kind == FieldKind::Rational) {
        if (x.q < y.q)
            return -1;
        if (y.q < x.q)
            return 1;
        return 0;
    }
    if (x.sym < y.sym)
        return -1;
    if (y.sym < x.sym)
        return 1;
    return 0;
}

namespace {

// Prime exponent vector of |n| by trial division; inputs here are small.
std::map<Int, long> factor_exponents(Int n) {
    std::map<Int, long> out;
    if (n < 0)
        n = -n;
    if (n <= 1)
        return out;
    for (Int p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1)
        ++out[n];
    return out;
}

std::map<Int, long> rational_exponents(const Rat& r) {
    auto num = factor_exponents(numerator(r));
    for (auto& [p, e] : factor_exponents(denominator(r)))
        num[p] -= e;
    for (auto it = num.begin(); it != num.end();)
        it = (it->second == 0) ? num.erase(it) : std::next(it);
    return num;
}

} // namespace

bool mult_dependent_with_one_minus(const FieldValue& a) {
    if (a.kind != FieldKind::Rational)
        return false;
    if (a.q == 0 || a.q == 1)
        throw std::domain_error("mult_dependent_with_one_minus: a must avoid {0,1}");
    auto va = rational_exponents(a.q);
    auto vb = rational_exponents(Rat(1) - a.q);
    if (va.empty() || vb.empty())
        return true; // one of them is a unit +-1
    // Dependent iff the two exponent vectors are proportional over Q.
    // Cross-check every prime appearing in either.
    std::vector<Int> primes;
    for (auto& [p, e] : va)
        primes.push_back(p);
    for (auto& [p, e] : vb)
        if (!va.count(p))
            primes.push_back(p);
    const Int p0 = primes.front();
    long a0 = va.count(p0) ? va[p0] : 0;
    long b0 = vb.count(p0) ? vb[p0] : 0;
    for (const Int& p : primes) {
        long ai = va.count(p) ? va[p] : 0;
        long bi = vb.count(p) ? vb[p] : 0;
        if (Int(a0) * bi != Int(b0) * ai)
            return false;
    }
    return true;
}

} // namespace motivic
