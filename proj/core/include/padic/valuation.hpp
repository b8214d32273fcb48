#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "padic/errors.hpp"

namespace padic {

/// An integer valuation extended with +infinity (the valuation of zero).
/// +infinity compares greater than every integer and absorbs under addition.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(std::int64_t v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }

    std::int64_t value() const {
        if (infinite_) throw Error("valuation is +infinity");
        return v_;
    }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.v_ + b.v_);
    }
    friend Valuation operator-(const Valuation& a, std::int64_t s) {
        return a.infinite_ ? infinity() : finite(a.v_ - s);
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.v_ <=> b.v_;
    }
    friend bool operator==(const Valuation& a, std::int64_t v) { return !a.infinite_ && a.v_ == v; }
    friend std::strong_ordering operator<=>(const Valuation& a, std::int64_t v) {
        return a <=> finite(v);
    }

    std::string str() const { return infinite_ ? "+inf" : std::to_string(v_); }

private:
    Valuation(bool inf, std::int64_t v) : infinite_(inf), v_(v) {}
    bool infinite_;
    std::int64_t v_;
};

}  // namespace padic
