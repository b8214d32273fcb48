#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "padic/bigint.hpp"
#include "padic/errors.hpp"
#include "padic/prime.hpp"
#include "padic/valuation.hpp"

namespace padic {

/// An exact ultrametric magnitude p^e with e a rational number, extended by
/// the magnitude 0 (exponent -infinity) and an unbounded magnitude (exponent
/// +infinity, used for radii of everywhere-convergent series). Every norm,
/// radius, type and weight in this library is carried as a LogNorm so that
/// all comparisons are exact.
class LogNorm {
public:
    /// Magnitude 0 (the norm of an exact zero).
    static LogNorm zero() { return LogNorm(Kind::Zero, 0); }
    /// Unbounded magnitude.
    static LogNorm unbounded() { return LogNorm(Kind::Unbounded, 0); }
    static LogNorm from_exponent(BigRational e) { return LogNorm(Kind::Finite, std::move(e)); }
    static LogNorm from_exponent(std::int64_t e) { return from_exponent(BigRational(e)); }
    /// |x|_p = p^{-v} for a value of valuation v; valuation +inf maps to zero.
    static LogNorm from_valuation(const Valuation& v) {
        return v.is_infinite() ? zero() : from_exponent(BigRational(-v.value()));
    }
    /// Magnitude 1.
    static LogNorm one() { return from_exponent(0); }

    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_unbounded() const { return kind_ == Kind::Unbounded; }
    bool is_finite() const { return kind_ == Kind::Finite; }

    const BigRational& exponent() const {
        if (kind_ != Kind::Finite) throw Error("LogNorm exponent is not finite");
        return exp_;
    }

    /// Product of magnitudes (sum of exponents). Zero absorbs; zero times an
    /// unbounded magnitude is undefined.
    friend LogNorm operator*(const LogNorm& a, const LogNorm& b) {
        if (a.is_zero() || b.is_zero()) {
            if (a.is_unbounded() || b.is_unbounded()) throw Error("LogNorm: 0 * unbounded");
            return zero();
        }
        if (a.is_unbounded() || b.is_unbounded()) return unbounded();
        return from_exponent(a.exp_ + b.exp_);
    }
    friend LogNorm operator/(const LogNorm& a, const LogNorm& b) {
        if (b.is_zero()) throw DivisionByZero();
        if (a.is_zero()) return zero();
        if (a.is_unbounded()) return unbounded();
        if (b.is_unbounded()) return zero();
        return from_exponent(a.exp_ - b.exp_);
    }

    /// Magnitude raised to an integer power.
    LogNorm pow(std::int64_t k) const {
        if (kind_ == Kind::Finite) return from_exponent(exp_ * k);
        if (k == 0) return one();
        if (k > 0) return *this;
        return kind_ == Kind::Zero ? unbounded() : zero();
    }

    friend bool operator==(const LogNorm& a, const LogNorm& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.exp_ == b.exp_);
    }
    friend std::partial_ordering operator<=>(const LogNorm& a, const LogNorm& b) {
        auto rank = [](Kind k) { return k == Kind::Zero ? 0 : k == Kind::Finite ? 1 : 2; };
        if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
        if (a.kind_ != Kind::Finite) return std::partial_ordering::equivalent;
        if (a.exp_ < b.exp_) return std::partial_ordering::less;
        if (a.exp_ > b.exp_) return std::partial_ordering::greater;
        return std::partial_ordering::equivalent;
    }

    static LogNorm max(const LogNorm& a, const LogNorm& b) { return a < b ? b : a; }

    /// Exact comparison p^e <= c for a positive rational c.
    bool leq_rational(const BigRational& c, const Prime& p) const;

    /// "p^(e)" with the exact exponent, "0", or "unbounded".
    std::string str(const Prime& p) const;
    /// Exponent alone: "-inf", "+inf" or the exact rational.
    std::string exponent_str() const;

private:
    enum class Kind { Zero, Finite, Unbounded };
    LogNorm(Kind k, BigRational e) : kind_(k), exp_(std::move(e)) {}
    Kind kind_;
    BigRational exp_;
};

}  // namespace padic
