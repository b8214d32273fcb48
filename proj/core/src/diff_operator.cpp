#include "padic/diff_operator.hpp"

#include <sstream>

#include "padic/errors.hpp"

namespace padic {

DifferentialOperator::DifferentialOperator(const Prime& p, std::size_t variables,
                                           BigRational rho_exponent,
                                           std::int64_t truncation_degree, std::size_t max_order,
                                           std::map<MultiIndex, AnalyticFunction> terms)
    : prime_(p),
      variables_(variables),
      rho_exponent_(std::move(rho_exponent)),
      truncation_degree_(truncation_degree),
      max_order_(max_order),
      terms_(std::move(terms)) {
    if (variables_ == 0) throw SpaceMismatch("operator needs at least one variable");
    for (const auto& [beta, coeff] : terms_) {
        if (beta.variables() != variables_) throw SpaceMismatch("derivative multi-index arity");
        if (static_cast<std::size_t>(beta.total()) > max_order_)
            throw SpaceMismatch("derivative order exceeds the operator's max order");
        if (coeff.prime() != prime_ || coeff.variables() != variables_ ||
            coeff.rho_exponent() != rho_exponent_ ||
            coeff.truncation_degree() != truncation_degree_)
            throw SpaceMismatch("coefficient lives in a different function space");
    }
}

DifferentialOperator DifferentialOperator::from_terms(std::map<MultiIndex, AnalyticFunction> terms) {
    if (terms.empty()) throw SpaceMismatch("operator needs at least one term");
    const AnalyticFunction& first = terms.begin()->second;
    return DifferentialOperator(first.prime(), first.variables(), first.rho_exponent(),
                                first.truncation_degree(), first.variables(), std::move(terms));
}

AnalyticFunction DifferentialOperator::apply(const AnalyticFunction& f) const {
    if (f.prime() != prime_ || f.variables() != variables_ || f.rho_exponent() != rho_exponent_ ||
        f.truncation_degree() != truncation_degree_)
        throw SpaceMismatch("operand lives in a different function space");
    AnalyticFunction out =
        AnalyticFunction::zero(prime_, variables_, rho_exponent_, truncation_degree_);
    for (const auto& [beta, coeff] : terms_) {
        AnalyticFunction derived = f;
        for (std::size_t j = 0; j < variables_; ++j)
            for (std::uint32_t r = 0; r < beta[j]; ++r)
                derived = partial_derivative(derived, j + 1);
        out = out + multiply(coeff, derived);
    }
    return out;
}

LogNorm DifferentialOperator::norm_bound() const {
    LogNorm bound = LogNorm::zero();
    for (const auto& [beta, coeff] : terms_) {
        const LogNorm weight = LogNorm::from_exponent(-rho_exponent_ * beta.total());
        bound = LogNorm::max(bound, weight * coeff.norm());
    }
    return bound;
}

std::string DifferentialOperator::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [beta, coeff] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << coeff.str() << ")";
        if (beta.total() > 0) {
            out << "*D^(";
            for (std::size_t j = 0; j < beta.variables(); ++j) out << (j ? "," : "") << beta[j];
            out << ")";
        }
    }
    return first ? "0" : out.str();
}

}  // namespace padic
