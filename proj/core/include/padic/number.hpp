#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/bigint.hpp"
#include "padic/errors.hpp"
#include "padic/lognorm.hpp"
#include "padic/prime.hpp"
#include "padic/valuation.hpp"

namespace padic {

/// An element of Q_p at finite absolute precision.
///
/// A value is in exactly one of three states:
///   - exact zero: provably zero (valuation +infinity);
///   - nonzero: p^v * u with unit u in [1, p^N), p not dividing u, and N >= 1
///     relative digits, i.e. the value is known modulo p^{v+N};
///   - zero at precision m: congruent to 0 modulo p^m without being provably
///     zero, so the valuation is only known to be >= m.
/// The three states are kept distinct because truncation-bound logic must
/// tell "provably zero" apart from "indistinguishable from zero".
///
/// Values are immutable; all operations are pure functions and never report
/// more precision than the inputs justify (addition: min of absolute
/// precisions; multiplication and division: min of relative precisions).
class PadicNumber {
public:
    enum class ZeroState { nonzero, exact_zero, zero_at_precision };

    static PadicNumber exact_zero(const Prime& p);
    static PadicNumber zero_at_precision(const Prime& p, std::int64_t abs_precision);
    /// Canonical embedding of num/den into Q_p with `precision` relative digits.
    static PadicNumber from_rational(const BigInt& num, const BigInt& den, const Prime& p,
                                     std::int64_t precision);
    static PadicNumber from_rational(const BigRational& q, const Prime& p, std::int64_t precision);
    static PadicNumber from_integer(const BigInt& n, const Prime& p, std::int64_t precision);

    ZeroState zero_state() const {
        return state_ == State::Nonzero     ? ZeroState::nonzero
               : state_ == State::ExactZero ? ZeroState::exact_zero
                                            : ZeroState::zero_at_precision;
    }
    bool is_exact_zero() const { return state_ == State::ExactZero; }
    bool is_zero_at_precision() const { return state_ == State::ZeroAtPrecision; }
    bool is_nonzero() const { return state_ == State::Nonzero; }

    const Prime& prime() const { return prime_; }

    /// Valuation; +infinity for an exact zero. For a value indistinguishable
    /// from zero the valuation is undetermined and PrecisionExhausted is
    /// raised (it is only known to be >= abs_precision()).
    Valuation valuation() const;
    /// |x|_p = p^{-valuation}; exact zero has magnitude 0.
    LogNorm norm() const;
    /// Like norm(), but returns the certified bound p^{-m} instead of
    /// throwing when the value is only known to vanish modulo p^m.
    LogNorm norm_upper_bound() const;

    /// Relative precision (digit count) of a nonzero value.
    std::int64_t precision() const;
    /// The value is known modulo p^{abs_precision()}; +infinity when exact zero.
    Valuation abs_precision() const;

    /// Unit part u of a nonzero value (p^v * u).
    const BigInt& unit() const;
    /// Base-p digits of the unit part, trailing zeros stripped; empty for
    /// both zero states. The first digit of a nonzero value is never 0.
    std::vector<std::int64_t> digits() const;

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    /// Multiplication by an exactly known integer: relative precision is
    /// preserved and the valuation shifts by v_p(t).
    PadicNumber times_integer(const BigInt& t) const;
    /// Division by an exactly known nonzero integer; costs v_p(t) digits of
    /// absolute precision (none of relative precision).
    PadicNumber divided_by_integer(const BigInt& t) const;

    /// x^k for k >= 0 (x must be nonzero when k = 0).
    PadicNumber pow_nonneg(std::uint64_t k) const;

    /// Reduces to absolute precision m (forgetting digits above p^m).
    PadicNumber truncated(std::int64_t abs_precision) const;

    /// "2 + 1*3 + 1*3^2 + O(3^4)"; zeros render as "0" or "O(3^m)".
    std::string to_expanded_string() const;
    /// "val=0 digits=[2,1,1,1] prec=4".
    std::string to_compact_string() const;

    /// Rational reconstruction of the unit modulo p^N (numerator and
    /// denominator below sqrt(p^N / 2)); nullopt when no small rational
    /// matches or the value is an undetermined zero.
    std::optional<BigRational> try_to_rational() const;

private:
    enum class State { ExactZero, ZeroAtPrecision, Nonzero };

    PadicNumber(const Prime& p, State s) : prime_(p), state_(s) {}

    /// Normalizes a residue: the value is V * p^{base} with V known modulo
    /// p^{window}, window >= 1.
    static PadicNumber make(const Prime& p, std::int64_t base, BigInt value, std::int64_t window);

    Prime prime_;
    State state_;
    std::int64_t valuation_ = 0;  // valuation (Nonzero) or abs precision (ZeroAtPrecision)
    std::int64_t precision_ = 0;  // relative digits, Nonzero only
    BigInt unit_;
};

/// True when a - b is not provably nonzero at the shared precision.
bool indistinguishable(const PadicNumber& a, const PadicNumber& b);

/// Parses a rational literal "a/b" (embedded at `default_precision` digits)
/// or the compact form "val=v digits=[...] prec=N".
PadicNumber parse_padic(const std::string& text, const Prime& p, std::int64_t default_precision);

/// v_p(n!) by Legendre's identity (n minus the base-p digit sum of n,
/// divided by p-1). Exact for all n >= 0.
Valuation vp_factorial(std::uint64_t n, const Prime& p);

/// The exact magnitude 1/|k!|_p = p^{v_p(k!)} together with the universal
/// ceiling p^{k/(p-1)} it never exceeds.
struct FactorialNormBound {
    LogNorm value;
    LogNorm ceiling;
    bool within;
};
FactorialNormBound factorial_norm_bound(std::uint64_t k, const Prime& p);

}  // namespace padic
