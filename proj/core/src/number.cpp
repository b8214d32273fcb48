#include "padic/number.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

PadicNumber PadicNumber::exact_zero(const Prime& p) { return PadicNumber(p, State::ExactZero); }

PadicNumber PadicNumber::zero_at_precision(const Prime& p, std::int64_t abs_precision) {
    PadicNumber x(p, State::ZeroAtPrecision);
    x.valuation_ = abs_precision;
    return x;
}

PadicNumber PadicNumber::make(const Prime& p, std::int64_t base, BigInt value,
                              std::int64_t window) {
    if (window < 1) return zero_at_precision(p, base + window);
    const BigInt modulus = p.power(window);
    value = mod_reduce(value, modulus);
    if (value == 0) return zero_at_precision(p, base + window);
    const std::int64_t shift = int_valuation(value, p.big());
    PadicNumber x(p, State::Nonzero);
    x.valuation_ = base + shift;
    x.precision_ = window - shift;
    x.unit_ = value / p.power(shift);
    return x;
}

PadicNumber PadicNumber::from_rational(const BigInt& num, const BigInt& den, const Prime& p,
                                       std::int64_t precision) {
    if (den == 0) throw ZeroDenominator();
    if (precision < 1) throw Error("precision must be >= 1");
    if (num == 0) return exact_zero(p);
    BigInt n = num, d = den;
    const std::int64_t v = remove_factor(n, p.big()) - remove_factor(d, p.big());
    const BigInt modulus = p.power(precision);
    const BigInt unit = mod_reduce(n * mod_inverse(d, modulus), modulus);
    PadicNumber x(p, State::Nonzero);
    x.valuation_ = v;
    x.precision_ = precision;
    x.unit_ = unit;
    return x;
}

PadicNumber PadicNumber::from_rational(const BigRational& q, const Prime& p,
                                       std::int64_t precision) {
    return from_rational(boost::multiprecision::numerator(q),
                         boost::multiprecision::denominator(q), p, precision);
}

PadicNumber PadicNumber::from_integer(const BigInt& n, const Prime& p, std::int64_t precision) {
    return from_rational(n, 1, p, precision);
}

Valuation PadicNumber::valuation() const {
    switch (state_) {
        case State::ExactZero: return Valuation::infinity();
        case State::Nonzero: return Valuation::finite(valuation_);
        default:
            throw PrecisionExhausted("valuation undetermined: value vanishes modulo p^" +
                                     std::to_string(valuation_));
    }
}

LogNorm PadicNumber::norm() const { return LogNorm::from_valuation(valuation()); }

LogNorm PadicNumber::norm_upper_bound() const {
    if (state_ == State::ZeroAtPrecision) return LogNorm::from_exponent(-valuation_);
    return norm();
}

std::int64_t PadicNumber::precision() const {
    if (state_ != State::Nonzero) throw Error("relative precision of a zero value");
    return precision_;
}

Valuation PadicNumber::abs_precision() const {
    switch (state_) {
        case State::ExactZero: return Valuation::infinity();
        case State::Nonzero: return Valuation::finite(valuation_ + precision_);
        default: return Valuation::finite(valuation_);
    }
}

const BigInt& PadicNumber::unit() const {
    if (state_ != State::Nonzero) throw Error("unit part of a zero value");
    return unit_;
}

std::vector<std::int64_t> PadicNumber::digits() const {
    std::vector<std::int64_t> out;
    if (state_ != State::Nonzero) return out;
    BigInt u = unit_;
    const BigInt p = prime_.big();
    BigInt q, r;
    while (u != 0) {
        boost::multiprecision::divide_qr(u, p, q, r);
        out.push_back(static_cast<std::int64_t>(r));
        u = q;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

PadicNumber PadicNumber::operator-() const {
    if (state_ != State::Nonzero) return *this;
    PadicNumber x(*this);
    x.unit_ = prime_.power(precision_) - unit_;
    return x;
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    if (a.prime_ != b.prime_) throw PrimeMismatch();
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;

    const std::int64_t abs = std::min(a.abs_precision().value(), b.abs_precision().value());
    std::int64_t base = abs;  // no nonzero contribution starts below `base`
    if (a.is_nonzero()) base = std::min(base, a.valuation_);
    if (b.is_nonzero()) base = std::min(base, b.valuation_);
    if (abs <= base) return PadicNumber::zero_at_precision(a.prime_, abs);

    BigInt value = 0;
    if (a.is_nonzero()) value += a.unit_ * a.prime_.power(a.valuation_ - base);
    if (b.is_nonzero()) value += b.unit_ * b.prime_.power(b.valuation_ - base);
    return PadicNumber::make(a.prime_, base, std::move(value), abs - base);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    if (a.prime_ != b.prime_) throw PrimeMismatch();
    if (a.is_exact_zero() || b.is_exact_zero()) return PadicNumber::exact_zero(a.prime_);
    // A factor that merely vanishes modulo p^m keeps the product unprovably
    // zero; the congruence exponents add.
    if (a.is_zero_at_precision() || b.is_zero_at_precision())
        return PadicNumber::zero_at_precision(a.prime_, a.valuation_ + b.valuation_);
    PadicNumber x(a.prime_, PadicNumber::State::Nonzero);
    x.valuation_ = a.valuation_ + b.valuation_;
    x.precision_ = std::min(a.precision_, b.precision_);
    x.unit_ = mod_reduce(a.unit_ * b.unit_, a.prime_.power(x.precision_));
    return x;
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    if (a.prime_ != b.prime_) throw PrimeMismatch();
    if (b.is_exact_zero()) throw DivisionByZero();
    if (b.is_zero_at_precision())
        throw PrecisionExhausted("divisor indistinguishable from zero modulo p^" +
                                 std::to_string(b.valuation_));
    if (a.is_exact_zero()) return a;
    if (a.is_zero_at_precision())
        return PadicNumber::zero_at_precision(a.prime_, a.valuation_ - b.valuation_);
    PadicNumber x(a.prime_, PadicNumber::State::Nonzero);
    x.valuation_ = a.valuation_ - b.valuation_;
    x.precision_ = std::min(a.precision_, b.precision_);
    const BigInt modulus = a.prime_.power(x.precision_);
    x.unit_ = mod_reduce(a.unit_ * mod_inverse(b.unit_, modulus), modulus);
    return x;
}

PadicNumber PadicNumber::times_integer(const BigInt& t) const {
    if (t == 0) return exact_zero(prime_);
    if (is_exact_zero()) return *this;
    BigInt u = t;
    const std::int64_t w = remove_factor(u, prime_.big());
    if (is_zero_at_precision()) return zero_at_precision(prime_, valuation_ + w);
    PadicNumber x(*this);
    x.valuation_ += w;
    x.unit_ = mod_reduce(unit_ * u, prime_.power(precision_));
    return x;
}

PadicNumber PadicNumber::divided_by_integer(const BigInt& t) const {
    if (t == 0) throw DivisionByZero();
    if (is_exact_zero()) return *this;
    BigInt u = t;
    const std::int64_t w = remove_factor(u, prime_.big());
    if (is_zero_at_precision()) return zero_at_precision(prime_, valuation_ - w);
    PadicNumber x(*this);
    x.valuation_ -= w;
    const BigInt modulus = prime_.power(precision_);
    x.unit_ = mod_reduce(unit_ * mod_inverse(mod_reduce(u, modulus), modulus), modulus);
    return x;
}

PadicNumber PadicNumber::pow_nonneg(std::uint64_t k) const {
    if (k == 0) {
        if (!is_nonzero()) throw Error("0^0 at finite precision");
        return from_integer(1, prime_, precision_);
    }
    PadicNumber acc = *this;
    for (std::uint64_t i = 1; i < k; ++i) acc = acc * *this;
    return acc;
}

PadicNumber PadicNumber::truncated(std::int64_t abs_precision) const {
    switch (state_) {
        case State::ExactZero: return *this;
        case State::ZeroAtPrecision:
            return zero_at_precision(prime_, std::min(valuation_, abs_precision));
        default:
            if (valuation_ + precision_ <= abs_precision) return *this;
            return make(prime_, valuation_, unit_, abs_precision - valuation_);
    }
}

std::string PadicNumber::to_expanded_string() const {
    const std::string ps = std::to_string(prime_.value());
    if (is_exact_zero()) return "0";
    if (is_zero_at_precision()) return "O(" + ps + "^" + std::to_string(valuation_) + ")";
    std::ostringstream out;
    bool first = true;
    const auto ds = digits();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (ds[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        const std::int64_t e = valuation_ + static_cast<std::int64_t>(i);
        if (e == 0)
            out << ds[i];
        else if (e == 1)
            out << ds[i] << "*" << ps;
        else
            out << ds[i] << "*" << ps << "^" << e;
    }
    if (!first) out << " + ";
    out << "O(" << ps << "^" << (valuation_ + precision_) << ")";
    return out.str();
}

std::string PadicNumber::to_compact_string() const {
    if (is_exact_zero()) return "val=+inf digits=[] prec=+inf";
    if (is_zero_at_precision())
        return "val=? digits=[] prec=" + std::to_string(valuation_);
    std::ostringstream out;
    out << "val=" << valuation_ << " digits=[";
    const auto ds = digits();
    for (std::size_t i = 0; i < ds.size(); ++i) out << (i ? "," : "") << ds[i];
    out << "] prec=" << precision_;
    return out.str();
}

std::optional<BigRational> PadicNumber::try_to_rational() const {
    if (is_exact_zero()) return BigRational(0);
    if (is_zero_at_precision()) return std::nullopt;
    // Half-extended Euclid on (p^N, u); stop once the remainder drops below
    // sqrt((p^N - 1) / 2), which pins num and den of any small rational
    // congruent to u.
    const BigInt modulus = prime_.power(precision_);
    const BigInt bound = boost::multiprecision::sqrt((modulus - 1) / 2);
    BigInt r0 = modulus, r1 = unit_;
    BigInt s0 = 0, s1 = 1;
    while (r1 > bound) {
        const BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (s1 == 0 || boost::multiprecision::abs(s1) > bound) return std::nullopt;
    if (s1 % prime_.big() == 0) return std::nullopt;
    BigInt num = r1, den = s1;
    if (den < 0) { den = -den; num = -num; }
    if (boost::multiprecision::gcd(num, den) != 1) return std::nullopt;
    BigRational q(num, den);
    const BigRational scale(valuation_ >= 0 ? prime_.power(valuation_) : BigInt(1),
                            valuation_ >= 0 ? BigInt(1) : prime_.power(-valuation_));
    return q * scale;
}

bool indistinguishable(const PadicNumber& a, const PadicNumber& b) {
    return !(a - b).is_nonzero();
}

PadicNumber parse_padic(const std::string& text, const Prime& p, std::int64_t default_precision) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty p-adic literal");
    if (text.compare(first, 4, "val=") != 0)
        return PadicNumber::from_rational(parse_rational(text), p, default_precision);

    std::string body = text.substr(first);
    if (body.find("val=+inf") == 0) return PadicNumber::exact_zero(p);
    if (body.find("val=?") == 0) throw ParseError("cannot parse an undetermined zero");
    std::istringstream in(body);
    std::int64_t val = 0, prec = 0;
    char c;
    in.ignore(4);  // "val="
    in >> val;
    std::string tag;
    in >> tag;  // "digits=[...]" possibly with no spaces inside
    if (tag.compare(0, 8, "digits=[") != 0) throw ParseError("bad compact p-adic form: " + text);
    std::string digit_body = tag.substr(8);
    if (!digit_body.empty() && digit_body.back() == ']') digit_body.pop_back();
    std::vector<std::int64_t> ds;
    if (!digit_body.empty()) {
        std::istringstream din(digit_body);
        std::int64_t d;
        while (din >> d) {
            if (d < 0 || d >= p.value()) throw ParseError("digit out of range in: " + text);
            ds.push_back(d);
            if (din >> c && c != ',') throw ParseError("bad digit list in: " + text);
        }
    }
    in >> tag;
    if (tag.compare(0, 5, "prec=") != 0) throw ParseError("bad compact p-adic form: " + text);
    prec = std::stoll(tag.substr(5));
    if (prec < 1 || static_cast<std::int64_t>(ds.size()) > prec)
        throw ParseError("bad precision in: " + text);
    if (ds.empty() || ds.front() == 0) throw ParseError("compact form requires a leading nonzero digit");
    BigInt unit = 0;
    for (std::size_t i = ds.size(); i > 0; --i) unit = unit * p.value() + ds[i - 1];
    const PadicNumber u = PadicNumber::from_integer(unit, p, prec);
    return val >= 0 ? u.times_integer(p.power(val)) : u.divided_by_integer(p.power(-val));
}

Valuation vp_factorial(std::uint64_t n, const Prime& p) {
    const BigInt bn(n);
    const std::int64_t v =
        static_cast<std::int64_t>((bn - digit_sum(bn, p.big())) / (p.big() - 1));
    return Valuation::finite(v);
}

FactorialNormBound factorial_norm_bound(std::uint64_t k, const Prime& p) {
    FactorialNormBound out{
        LogNorm::from_exponent(vp_factorial(k, p).value()),
        LogNorm::from_exponent(BigRational(BigInt(k), BigInt(p.value() - 1))),
        false,
    };
    out.within = !(out.ceiling < out.value);
    return out;
}

}  // namespace padic
