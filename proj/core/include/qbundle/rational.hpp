#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qbundle {

// Exact arbitrary-precision rational scalar. Degree-4 coalgebra checks
// produce coefficients far beyond 64-bit range.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0)
        return Rational(1);
    if (base == 0) {
        if (e < 0)
            throw std::domain_error("rational_pow: zero base with negative exponent");
        return Rational(0);
    }
    Rational b = base;
    if (e < 0) {
        // cpp_rational rejects negative denominators, so flip signs first.
        BigInt num = numerator(base);
        BigInt den = denominator(base);
        const bool neg = num < 0;
        if (neg)
            num = -num;
        b = Rational(den, num);
        if (neg)
            b = -b;
    }
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1)
            acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Parses "p", "-p" or "p/r". Used by the CLI --q flag and the DSL.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

}  // namespace qbundle
