#include "padic/matrix.hpp"

#include <sstream>

#include "padic/errors.hpp"

namespace padic {

MatrixOperator::MatrixOperator(const Prime& p, std::size_t n, std::vector<PadicNumber> row_major)
    : prime_(p), n_(n), entries_(std::move(row_major)) {
    if (n_ == 0) throw DimensionMismatch("matrix dimension must be >= 1");
    if (entries_.size() != n_ * n_) throw DimensionMismatch("matrix entry count mismatch");
    for (const auto& e : entries_)
        if (e.prime() != prime_) throw PrimeMismatch();
}

MatrixOperator MatrixOperator::zero(const Prime& p, std::size_t n) {
    return MatrixOperator(p, n, std::vector<PadicNumber>(n * n, PadicNumber::exact_zero(p)));
}

MatrixOperator MatrixOperator::identity(const Prime& p, std::size_t n, std::int64_t precision) {
    std::vector<PadicNumber> entries(n * n, PadicNumber::exact_zero(p));
    for (std::size_t i = 0; i < n; ++i)
        entries[i * n + i] = PadicNumber::from_integer(1, p, precision);
    return MatrixOperator(p, n, std::move(entries));
}

MatrixOperator MatrixOperator::from_rationals(const std::vector<std::vector<BigRational>>& rows,
                                              const Prime& p, std::int64_t precision) {
    const std::size_t n = rows.size();
    std::vector<PadicNumber> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw DimensionMismatch("matrix rows must form a square");
        for (const auto& q : row) entries.push_back(PadicNumber::from_rational(q, p, precision));
    }
    return MatrixOperator(p, n, std::move(entries));
}

Vector MatrixOperator::apply(const Vector& x) const {
    if (x.prime() != prime_) throw PrimeMismatch();
    if (x.size() != n_) throw DimensionMismatch("matrix/vector dimension mismatch");
    std::vector<PadicNumber> out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        PadicNumber acc = PadicNumber::exact_zero(prime_);
        for (std::size_t j = 0; j < n_; ++j) acc = acc + at(i, j) * x[j];
        out.push_back(std::move(acc));
    }
    return Vector(prime_, std::move(out));
}

LogNorm MatrixOperator::norm_bound() const {
    LogNorm exact = LogNorm::zero();
    LogNorm pending = LogNorm::zero();
    for (const auto& e : entries_) {
        if (e.is_zero_at_precision())
            pending = LogNorm::max(pending, e.norm_upper_bound());
        else
            exact = LogNorm::max(exact, e.norm());
    }
    if (exact < pending)
        throw PrecisionExhausted("operator norm undetermined at the available precision");
    return exact;
}

std::string MatrixOperator::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < n_; ++i) {
        out << (i ? "; [" : "[");
        for (std::size_t j = 0; j < n_; ++j) out << (j ? ", " : "") << at(i, j).to_compact_string();
        out << "]";
    }
    return out.str();
}

}  // namespace padic
