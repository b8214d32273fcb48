#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "padic/errors.hpp"

namespace padic {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// base^exp for a non-negative exponent.
inline BigInt pow_int(const BigInt& base, std::int64_t exp) {
    if (exp < 0) throw Error("pow_int: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

/// Number of times `p` divides `n` (n != 0).
inline std::int64_t int_valuation(BigInt n, const BigInt& p) {
    if (n == 0) throw Error("int_valuation of zero");
    std::int64_t v = 0;
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, p, q, r);
        if (r != 0) return v;
        n = q;
        ++v;
    }
}

/// Splits n = p^v * u with p not dividing u; returns v and replaces n by u.
inline std::int64_t remove_factor(BigInt& n, const BigInt& p) {
    std::int64_t v = int_valuation(n, p);
    if (v > 0) n /= pow_int(p, v);
    return v;
}

/// Sum of the base-p digits of n >= 0.
inline std::int64_t digit_sum(BigInt n, const BigInt& p) {
    std::int64_t s = 0;
    BigInt q, r;
    while (n != 0) {
        boost::multiprecision::divide_qr(n, p, q, r);
        s += static_cast<std::int64_t>(r);
        n = q;
    }
    return s;
}

/// Canonical representative of n modulo m in [0, m).
inline BigInt mod_reduce(const BigInt& n, const BigInt& m) {
    BigInt r = n % m;
    if (r < 0) r += m;
    return r;
}

/// Inverse of a modulo m (gcd(a, m) must be 1), via the extended Euclid run.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// floor/ceil of an exact rational as int64.
inline std::int64_t floor_rational(const BigRational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    BigInt t = num / den;  // truncates toward zero
    if (num < 0 && t * den != num) --t;
    return static_cast<std::int64_t>(t);
}
inline std::int64_t ceil_rational(const BigRational& q) {
    return -floor_rational(-q);
}

/// Parses "a/b", "a", or "-a/b" into an exact rational.
BigRational parse_rational(const std::string& text);

/// Renders a rational as "a" or "a/b".
std::string rational_to_string(const BigRational& q);

}  // namespace padic
