#include "padic/lognorm.hpp"

namespace padic {

bool LogNorm::leq_rational(const BigRational& c, const Prime& p) const {
    if (c <= 0) throw Error("leq_rational: bound must be positive");
    if (kind_ == Kind::Zero) return true;
    if (kind_ == Kind::Unbounded) return false;
    // p^(u/w) <= a/b  <=>  p^u * b^w <= a^w   (w > 0), with negative u moved
    // across as a positive power of p.
    const BigInt u = boost::multiprecision::numerator(exp_);
    const BigInt w = boost::multiprecision::denominator(exp_);
    const BigInt a = boost::multiprecision::numerator(c);
    const BigInt b = boost::multiprecision::denominator(c);
    const auto wexp = static_cast<unsigned>(w);
    BigInt lhs = boost::multiprecision::pow(b, wexp);
    BigInt rhs = boost::multiprecision::pow(a, wexp);
    if (u >= 0)
        lhs *= boost::multiprecision::pow(p.big(), static_cast<unsigned>(u));
    else
        rhs *= boost::multiprecision::pow(p.big(), static_cast<unsigned>(-u));
    return lhs <= rhs;
}

std::string LogNorm::str(const Prime& p) const {
    if (kind_ == Kind::Zero) return "0";
    if (kind_ == Kind::Unbounded) return "unbounded";
    return std::to_string(p.value()) + "^(" + rational_to_string(exp_) + ")";
}

std::string LogNorm::exponent_str() const {
    if (kind_ == Kind::Zero) return "-inf";
    if (kind_ == Kind::Unbounded) return "+inf";
    return rational_to_string(exp_);
}

}  // namespace padic
