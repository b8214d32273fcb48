#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/lognorm.hpp"
#include "padic/number.hpp"
#include "padic/prime.hpp"
#include "padic/vector.hpp"

namespace padic {

/// A square matrix over Q_p acting on Q_p^n, i.e. a bounded operator under
/// the sup norm. Its operator norm is exactly the max entry magnitude.
class MatrixOperator {
public:
    MatrixOperator(const Prime& p, std::size_t n, std::vector<PadicNumber> row_major);

    static MatrixOperator zero(const Prime& p, std::size_t n);
    static MatrixOperator identity(const Prime& p, std::size_t n, std::int64_t precision);
    static MatrixOperator from_rationals(const std::vector<std::vector<BigRational>>& rows,
                                         const Prime& p, std::int64_t precision);

    const Prime& prime() const { return prime_; }
    std::size_t dimension() const { return n_; }
    const PadicNumber& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    Vector apply(const Vector& x) const;

    /// Exact sup-norm operator norm (max entry magnitude). There always is a
    /// basis vector achieving it.
    LogNorm norm_bound() const;

    std::string str() const;

private:
    Prime prime_;
    std::size_t n_;
    std::vector<PadicNumber> entries_;
};

}  // namespace padic
