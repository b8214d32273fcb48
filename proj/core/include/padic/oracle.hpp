#pragma once

#include <cstdint>
#include <vector>

#include "padic/bigint.hpp"
#include "padic/number.hpp"
#include "padic/prime.hpp"
#include "padic/valuation.hpp"

namespace padic::oracle {

/// Exact rational arithmetic reference implementations. Everything here is
/// brute force over arbitrary-size rationals and deliberately shares no code
/// with the p-adic pipeline it validates.

using ExactRational = BigRational;

/// v_p(num) - v_p(den); zero maps to +infinity.
Valuation rational_valuation(const ExactRational& q, const Prime& p);

/// Exact partial sum  sum_{k<=K} A^k y0 z^k / k!  over the rationals.
/// Matrix entries are row-major, dimension n x n.
std::vector<ExactRational> exact_series_partial_sum(const std::vector<ExactRational>& matrix,
                                                    std::size_t n,
                                                    const std::vector<ExactRational>& y0,
                                                    const ExactRational& z, std::size_t K);

/// Canonical image of q in Q_p at `precision` relative digits, computed by
/// digit-by-digit long division (not by a modular inverse at p^N).
PadicNumber reduce_mod_pN(const ExactRational& q, const Prime& p, std::int64_t precision);

/// v_p(n!) obtained by factoring every k <= n directly (no digit-sum
/// identity involved).
std::int64_t factorial_valuation_by_factorization(std::uint64_t n, const Prime& p);

/// n! as an exact integer.
BigInt big_factorial(std::uint64_t n);

}  // namespace padic::oracle
