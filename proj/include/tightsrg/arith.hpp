#pragma once

// Exact integer/rational arithmetic helpers. Everything in the parameter
// engine works over arbitrary-precision numbers; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include "tightsrg/errors.hpp"

namespace tightsrg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

// The two-argument cpp_rational constructor rejects negative input in the
// boost release shipped here; build quotients by exact division instead.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("rational with zero denominator");
    return Rat(num) / Rat(den);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline bool is_nonneg_integer(const Rat& r) { return r >= 0 && is_integer(r); }

inline bool divides(const Int& d, const Int& n) { return d != 0 && n % d == 0; }

// floor square root; exact when n is a perfect square
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int s = isqrt(n);
    if (root) *root = s;
    return s * s == n;
}

// deterministic trial division; inputs here are tiny (divisors of e+)
inline bool is_prime(const Int& p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline bool is_odd_prime(const Int& p) { return p != 2 && is_prime(p); }

// a^e mod p with exact arithmetic
inline Int mod_pow(Int a, Int e, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    Int result = 1;
    while (e > 0) {
        if ((e & 1) != 0) result = result * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return result;
}

inline long to_long(const Int& n) { return n.convert_to<long>(); }

}  // namespace tightsrg
