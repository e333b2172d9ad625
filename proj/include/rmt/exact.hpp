#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace rmt {

/// Arbitrary-precision integer / rational backend for the exact identities.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (unsigned j = 0; j < k; ++j) {
        result *= n - j;
        result /= j + 1;  // divides exactly: running product of j+1 consecutive integers
    }
    return result;
}

inline Int factorial(unsigned n) {
    Int result = 1;
    for (unsigned j = 2; j <= n; ++j) result *= j;
    return result;
}

/// (2m - 1)!! = 1 * 3 * ... * (2m - 1); the m = 0 empty product is 1.
inline Int odd_double_factorial(unsigned m) {
    Int result = 1;
    for (unsigned j = 1; j <= m; ++j) result *= 2 * j - 1;
    return result;
}

/// x (x-1) ... (x-r+1)
inline Int falling_factorial(const Int& x, unsigned r) {
    Int result = 1;
    for (unsigned j = 0; j < r; ++j) result *= x - j;
    return result;
}

/// x (x+1) ... (x+m-1)
inline Rat rising_factorial(const Rat& x, unsigned m) {
    Rat result = 1;
    for (unsigned j = 0; j < m; ++j) result *= x + j;
    return result;
}

inline Rat rat_pow(Rat x, unsigned e) {
    Rat result = 1;
    while (e != 0) {
        if (e & 1u) result *= x;
        x *= x;
        e >>= 1u;
    }
    return result;
}

/// Exact rational value of a finite double.
inline Rat rat_from_double(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("rat_from_double: non-finite input");
    if (d == 0.0) return Rat(0);
    int exp = 0;
    double mant = std::frexp(d, &exp);  // d = mant * 2^exp, |mant| in [0.5, 1)
    auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rat r(scaled);
    if (exp >= 0) {
        r *= rat_pow(Rat(2), static_cast<unsigned>(exp));
    } else {
        r /= rat_pow(Rat(2), static_cast<unsigned>(-exp));
    }
    return r;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& i) { return i.convert_to<double>(); }

}  // namespace rmt
