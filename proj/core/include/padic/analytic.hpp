#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padic/bigint.hpp"
#include "padic/lognorm.hpp"
#include "padic/number.hpp"
#include "padic/prime.hpp"

namespace padic {

/// Exponent vector of a monomial x1^a1 ... xn^an, ordered graded-
/// lexicographically (total degree first, then lex) for deterministic
/// iteration and rendering.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}
    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<std::uint32_t>(n, 0)); }
    static MultiIndex unit(std::size_t n, std::size_t j);

    std::size_t variables() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::int64_t total() const;

    MultiIndex plus(const MultiIndex& other) const;
    /// alpha + e_j (j is 0-based here).
    MultiIndex plus_unit(std::size_t j) const;
    /// alpha - e_j, requires alpha_j >= 1.
    MultiIndex minus_unit(std::size_t j) const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

    /// "1", "x1", "x1^2*x3" ...
    std::string str() const;

private:
    std::vector<std::uint32_t> e_;
};

/// A truncated element of the weighted algebra A_rho: finitely many monomial
/// coefficients of total degree <= truncation_degree plus a certified bound
/// (truncation_norm) on the rho-norm of everything discarded above it. Exact
/// polynomials carry truncation_norm = 0. The rho-norm of a coefficient f_a
/// at multi-index a is |f_a|_p * rho^|a| with rho = p^{rho_exponent}; the
/// norm of the function is the max over stored terms combined with the
/// truncation bound.
class AnalyticFunction {
public:
    AnalyticFunction(const Prime& p, std::size_t variables, BigRational rho_exponent,
                     std::int64_t truncation_degree);

    static AnalyticFunction zero(const Prime& p, std::size_t variables,
                                 const BigRational& rho_exponent, std::int64_t truncation_degree) {
        return AnalyticFunction(p, variables, rho_exponent, truncation_degree);
    }
    static AnalyticFunction constant(const PadicNumber& c, std::size_t variables,
                                     const BigRational& rho_exponent,
                                     std::int64_t truncation_degree);
    static AnalyticFunction monomial(const PadicNumber& c, const MultiIndex& index,
                                     const BigRational& rho_exponent,
                                     std::int64_t truncation_degree);

    const Prime& prime() const { return prime_; }
    std::size_t variables() const { return variables_; }
    const BigRational& rho_exponent() const { return rho_exponent_; }
    std::int64_t truncation_degree() const { return truncation_degree_; }
    const LogNorm& truncation_norm() const { return truncation_norm_; }

    const std::map<MultiIndex, PadicNumber>& coefficients() const { return coeffs_; }
    /// Stored coefficient, or an exact zero if the monomial is absent.
    PadicNumber coefficient(const MultiIndex& index) const;
    /// Max total degree among stored terms; -1 when no term is stored.
    std::int64_t degree() const;

    /// sup_a |f_a|_p rho^|a| over stored terms, combined with the truncation
    /// bound via max. Undetermined (vanishing-at-precision) coefficients
    /// contribute their certified bound.
    LogNorm norm() const;
    LogNorm norm_upper_bound() const { return norm(); }
    /// The stored multi-index attaining the sup, when one exists and provably
    /// dominates the truncation bound.
    std::optional<MultiIndex> norm_witness() const;

    bool is_exact_zero() const { return coeffs_.empty() && truncation_norm_.is_zero(); }

    AnalyticFunction operator-() const;
    friend AnalyticFunction operator+(const AnalyticFunction& f, const AnalyticFunction& g);
    friend AnalyticFunction operator-(const AnalyticFunction& f, const AnalyticFunction& g);
    friend AnalyticFunction operator*(const AnalyticFunction& f, const AnalyticFunction& g);
    AnalyticFunction scaled(const PadicNumber& s) const;
    AnalyticFunction times_integer(const BigInt& t) const;
    AnalyticFunction divided_by_integer(const BigInt& t) const;

    /// Returns a copy with the truncation bound raised to at least `bound`.
    AnalyticFunction with_truncation_norm(const LogNorm& bound) const;

    /// Graded-lex rendering with rationally reconstructed coefficients, e.g.
    /// "3/5*x1^2*x2 + 7"; coefficients that do not reconstruct render in the
    /// compact p-adic form.
    std::string str() const;

private:
    friend AnalyticFunction multiply(const AnalyticFunction&, const AnalyticFunction&);
    friend AnalyticFunction partial_derivative(const AnalyticFunction&, std::size_t);

    void insert_term(const MultiIndex& index, const PadicNumber& value);
    void check_same_space(const AnalyticFunction& other) const;

    Prime prime_;
    std::size_t variables_;
    BigRational rho_exponent_;
    std::int64_t truncation_degree_;
    LogNorm truncation_norm_ = LogNorm::zero();
    std::map<MultiIndex, PadicNumber> coeffs_;
};

/// sup_a |f_a|_p rho^|a| (spec-facing name).
inline LogNorm rho_norm(const AnalyticFunction& f) { return f.norm(); }

/// d/dx_j with j 1-based: the coefficient at a is (a_j + 1) f_{a + e_j}. The
/// truncation bound is multiplied by rho^{-1}, the operator norm of the
/// derivative on A_rho.
AnalyticFunction partial_derivative(const AnalyticFunction& f, std::size_t j);

/// Exact convolution up to the truncation degree; products that land above
/// it are folded into the truncation bound via the submultiplicative
/// estimate.
AnalyticFunction multiply(const AnalyticFunction& f, const AnalyticFunction& g);

/// Parses "3/5*x1^2*x2 + 7 - x3" into the given space.
AnalyticFunction parse_polynomial(const std::string& text, const Prime& p, std::size_t variables,
                                  const BigRational& rho_exponent, std::int64_t truncation_degree,
                                  std::int64_t precision);

}  // namespace padic
