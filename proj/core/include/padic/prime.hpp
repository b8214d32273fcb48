#pragma once

#include <cstdint>

#include "padic/bigint.hpp"
#include "padic/errors.hpp"

namespace padic {

/// A validated prime. Primality is checked by trial division at construction;
/// primes are expected to stay small (< 10^6).
class Prime {
public:
    explicit Prime(std::int64_t p) : p_(p) {
        if (p < 2) throw Error("prime must be >= 2");
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw Error("not a prime: " + std::to_string(p));
    }

    std::int64_t value() const { return p_; }
    BigInt big() const { return BigInt(p_); }

    /// p^e for e >= 0.
    BigInt power(std::int64_t e) const { return pow_int(big(), e); }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

private:
    std::int64_t p_;
};

}  // namespace padic
