#pragma once

#include <concepts>
#include <cstdint>
#include <variant>

#include "padic/bigint.hpp"
#include "padic/lognorm.hpp"
#include "padic/matrix.hpp"
#include "padic/number.hpp"
#include "padic/vector.hpp"

namespace padic {

/// An element of a non-archimedean Banach space as the solvers see it:
/// linear structure, exact-integer scalars, an exact ultrametric norm and a
/// certified upper bound of it.
template <typename E>
concept BanachElement = requires(const E& a, const E& b, const PadicNumber& s, const BigInt& t) {
    { a.prime() } -> std::convertible_to<Prime>;
    { a + b } -> std::convertible_to<E>;
    { a - b } -> std::convertible_to<E>;
    { a.scaled(s) } -> std::convertible_to<E>;
    { a.times_integer(t) } -> std::convertible_to<E>;
    { a.divided_by_integer(t) } -> std::convertible_to<E>;
    { a.norm() } -> std::convertible_to<LogNorm>;
    { a.norm_upper_bound() } -> std::convertible_to<LogNorm>;
    { a.is_exact_zero() } -> std::convertible_to<bool>;
};

/// A bounded linear operator on a BanachElement space.
template <typename Op, typename E>
concept BoundedOperator = BanachElement<E> && requires(const Op& op, const E& x) {
    { op.prime() } -> std::convertible_to<Prime>;
    { op.apply(x) } -> std::convertible_to<E>;
    { op.norm_bound() } -> std::convertible_to<LogNorm>;
};

static_assert(BanachElement<Vector>);
static_assert(BoundedOperator<MatrixOperator, Vector>);

template <typename Op, typename E>
    requires BoundedOperator<Op, E>
E apply(const Op& op, const E& x) {
    return op.apply(x);
}

/// A^k x (k = 0 returns x unchanged).
template <typename Op, typename E>
    requires BoundedOperator<Op, E>
E power_apply(const Op& op, const E& x, std::uint64_t k) {
    E out = x;
    for (std::uint64_t i = 0; i < k; ++i) out = op.apply(out);
    return out;
}

template <typename Op>
LogNorm operator_norm_bound(const Op& op) {
    return op.norm_bound();
}

}  // namespace padic
