#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "padic/analytic.hpp"
#include "padic/lognorm.hpp"
#include "padic/matrix.hpp"
#include "padic/operators.hpp"

namespace padic {

/// The bounded operator f -> sum_beta a_beta D^beta f on A_rho, where beta
/// ranges over derivative multi-indices of order |beta| <= max_order and each
/// coefficient a_beta lives in the same space. Its operator norm is bounded
/// by max_beta rho^{-|beta|} ‖a_beta‖_rho.
class DifferentialOperator {
public:
    DifferentialOperator(const Prime& p, std::size_t variables, BigRational rho_exponent,
                         std::int64_t truncation_degree, std::size_t max_order,
                         std::map<MultiIndex, AnalyticFunction> terms);

    /// max_order defaults to the variable count.
    static DifferentialOperator from_terms(std::map<MultiIndex, AnalyticFunction> terms);

    const Prime& prime() const { return prime_; }
    std::size_t variables() const { return variables_; }
    const BigRational& rho_exponent() const { return rho_exponent_; }
    std::int64_t truncation_degree() const { return truncation_degree_; }
    std::size_t max_order() const { return max_order_; }
    const std::map<MultiIndex, AnalyticFunction>& terms() const { return terms_; }

    AnalyticFunction apply(const AnalyticFunction& f) const;

    /// max_beta rho^{-|beta|} ‖a_beta‖_rho.
    LogNorm norm_bound() const;

    std::string str() const;

private:
    Prime prime_;
    std::size_t variables_;
    BigRational rho_exponent_;
    std::int64_t truncation_degree_;
    std::size_t max_order_;
    std::map<MultiIndex, AnalyticFunction> terms_;
};

static_assert(BanachElement<AnalyticFunction>);
static_assert(BoundedOperator<DifferentialOperator, AnalyticFunction>);

/// The closed union of the two concrete bounded-operator kinds.
using OperatorSpec = std::variant<MatrixOperator, DifferentialOperator>;

inline LogNorm operator_norm_bound(const OperatorSpec& op) {
    return std::visit([](const auto& o) { return o.norm_bound(); }, op);
}

}  // namespace padic
