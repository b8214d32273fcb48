#include "padic/bigint.hpp"

#include <cctype>

namespace padic {

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    // Extended Euclid, iterative form; only the Bezout coefficient of a is kept.
    BigInt r0 = mod_reduce(a, m), r1 = m;
    BigInt s0 = 1, s1 = 0;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw Error("mod_inverse: operand not invertible");
    return mod_reduce(s0, m);
}

BigRational parse_rational(const std::string& text) {
    std::size_t start = 0, end = text.size();
    while (start < end && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (start == end) throw ParseError("empty rational literal");
    const std::string body = text.substr(start, end - start);

    const auto slash = body.find('/');
    auto parse_int = [&](const std::string& s) -> BigInt {
        if (s.empty()) throw ParseError("bad rational literal: '" + body + "'");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw ParseError("bad rational literal: '" + body + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("bad rational literal: '" + body + "'");
        return BigInt(s);
    };

    if (slash == std::string::npos) return BigRational(parse_int(body));
    BigInt num = parse_int(body.substr(0, slash));
    BigInt den = parse_int(body.substr(slash + 1));
    if (den == 0) throw ZeroDenominator();
    return BigRational(num, den);
}

std::string rational_to_string(const BigRational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace padic
