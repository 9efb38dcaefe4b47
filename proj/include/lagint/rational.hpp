#pragma once

// Exact rational arithmetic for the symbolic layer. Certification has to be
// tolerance-free, so coefficients are arbitrary-precision rationals.

#include <boost/multiprecision/cpp_int.hpp>

namespace lagint {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt big_binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline bool is_nonneg_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1 &&
           boost::multiprecision::numerator(r) >= 0;
}

} // namespace lagint
