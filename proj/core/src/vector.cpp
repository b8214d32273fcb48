#include "padic/vector.hpp"

#include <sstream>

#include "padic/errors.hpp"

namespace padic {

Vector::Vector(const Prime& p, std::vector<PadicNumber> entries)
    : prime_(p), entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionMismatch("vector must have at least one entry");
    for (const auto& e : entries_)
        if (e.prime() != prime_) throw PrimeMismatch();
}

Vector Vector::zero(const Prime& p, std::size_t n) {
    return Vector(p, std::vector<PadicNumber>(n, PadicNumber::exact_zero(p)));
}

Vector Vector::from_rationals(const std::vector<BigRational>& qs, const Prime& p,
                              std::int64_t precision) {
    std::vector<PadicNumber> entries;
    entries.reserve(qs.size());
    for (const auto& q : qs) entries.push_back(PadicNumber::from_rational(q, p, precision));
    return Vector(p, std::move(entries));
}

LogNorm Vector::norm() const {
    // Exact max over the exactly known entry norms; entries that merely
    // vanish modulo p^m only matter if their bound p^{-m} could exceed it.
    LogNorm exact = LogNorm::zero();
    LogNorm pending = LogNorm::zero();
    for (const auto& e : entries_) {
        if (e.is_zero_at_precision())
            pending = LogNorm::max(pending, e.norm_upper_bound());
        else
            exact = LogNorm::max(exact, e.norm());
    }
    if (exact < pending)
        throw PrecisionExhausted("sup norm undetermined: an entry is only bounded by " +
                                 pending.exponent_str() + " in exponent");
    return exact;
}

LogNorm Vector::norm_upper_bound() const {
    LogNorm bound = LogNorm::zero();
    for (const auto& e : entries_) bound = LogNorm::max(bound, e.norm_upper_bound());
    return bound;
}

bool Vector::is_exact_zero() const {
    for (const auto& e : entries_)
        if (!e.is_exact_zero()) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    std::vector<PadicNumber> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return Vector(a.prime(), std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) { return a + (-b); }

Vector Vector::operator-() const {
    std::vector<PadicNumber> out;
    out.reserve(size());
    for (const auto& e : entries_) out.push_back(-e);
    return Vector(prime_, std::move(out));
}

Vector Vector::scaled(const PadicNumber& s) const {
    std::vector<PadicNumber> out;
    out.reserve(size());
    for (const auto& e : entries_) out.push_back(e * s);
    return Vector(prime_, std::move(out));
}

Vector Vector::times_integer(const BigInt& t) const {
    std::vector<PadicNumber> out;
    out.reserve(size());
    for (const auto& e : entries_) out.push_back(e.times_integer(t));
    return Vector(prime_, std::move(out));
}

Vector Vector::divided_by_integer(const BigInt& t) const {
    std::vector<PadicNumber> out;
    out.reserve(size());
    for (const auto& e : entries_) out.push_back(e.divided_by_integer(t));
    return Vector(prime_, std::move(out));
}

std::string Vector::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) out << ", ";
        out << entries_[i].to_compact_string();
    }
    out << ")";
    return out.str();
}

bool Disk::contains(const PadicNumber& z) const {
    const LogNorm bound = z.norm_upper_bound();
    if (contains(bound)) return true;
    if (z.is_zero_at_precision())
        throw PrecisionExhausted("disk membership undetermined at the available precision");
    return false;
}

std::string Disk::str(const Prime& p) const {
    return std::string(is_open() ? "{|z| < " : "{|z| <= ") + radius_.str(p) + "}";
}

Vector parse_vector(const std::string& text, const Prime& p, std::int64_t default_precision) {
    std::vector<PadicNumber> entries;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        // Commas inside "digits=[...]" belong to the compact form, not the list.
        const std::size_t bracket = text.find('[', start);
        if (comma != std::string::npos && bracket != std::string::npos && bracket < comma) {
            const std::size_t close = text.find(']', bracket);
            if (close == std::string::npos) throw ParseError("unbalanced '[' in vector: " + text);
            comma = text.find(',', close);
        }
        const std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.find_first_not_of(" \t") != std::string::npos)
            entries.push_back(parse_padic(item, p, default_precision));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (entries.empty()) throw ParseError("empty vector literal");
    return Vector(p, std::move(entries));
}

}  // namespace padic
