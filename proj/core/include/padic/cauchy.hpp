#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "padic/errors.hpp"
#include "padic/exp_type.hpp"
#include "padic/lognorm.hpp"
#include "padic/number.hpp"
#include "padic/operators.hpp"
#include "padic/vector.hpp"

namespace padic {

/// p^{1/(p-1)}, the growth ceiling of 1/|k!|_p per step.
inline LogNorm factorial_growth_rate(const Prime& p) {
    return LogNorm::from_exponent(BigRational(1, p.value() - 1));
}

/// p^{-1/(p-1)}, the universal radius constant: the series solution converges
/// on the disk of radius p^{-1/(p-1)} / sigma.
inline LogNorm radius_constant(const Prime& p) {
    return LogNorm::from_exponent(BigRational(-1, p.value() - 1));
}

/// Relative working precision needed so that coefficients up to index K keep
/// `requested` digits after the incremental divisions by 1..K (which cost
/// exactly v_p(K!) digits of absolute precision in total).
inline std::int64_t working_precision(std::int64_t requested, std::size_t K, const Prime& p) {
    return requested + vp_factorial(K, p).value();
}

/// A certified growth model ‖A^k y0‖ <= scale * alpha^k, exact for all
/// k <= depth by construction; tail bounds extend it beyond the truncation.
struct AlphaCertificate {
    LogNorm alpha;
    LogNorm scale;
    std::size_t depth = 0;
};

/// Bound on the discarded tail of a truncated series evaluation. The k-th
/// term beyond the truncation is bounded by scale * (alpha |z| p^{1/(p-1)})^k;
/// the exponent is affine in k, so when the per-step magnitude is < 1 the max
/// over k > K is attained at k = K+1, otherwise no finite bound exists.
struct TailBound {
    std::size_t depth = 0;
    LogNorm bound = LogNorm::unbounded();
};

template <typename E>
struct Evaluation {
    E value;
    TailBound tail;
};

/// The truncated series solution of y' = Ay, y(0) = y0: coefficients
/// c_k = A^k y0 / k!, the type estimate of y0, and the convergence radius
/// p^{-1/(p-1)} / sigma (unbounded when sigma = 0).
template <typename Op, typename E>
    requires BoundedOperator<Op, E>
class SeriesSolution {
public:
    SeriesSolution(Op op, std::vector<E> coefficients, NormSequence power_norms,
                   TypeEstimate sigma, LogNorm radius, AlphaCertificate cert)
        : op_(std::move(op)),
          coefficients_(std::move(coefficients)),
          power_norms_(std::move(power_norms)),
          sigma_(std::move(sigma)),
          radius_(std::move(radius)),
          cert_(std::move(cert)) {}

    const Op& op() const { return op_; }
    Prime prime() const { return op_.prime(); }
    const E& initial() const { return coefficients_.front(); }
    const std::vector<E>& coefficients() const { return coefficients_; }
    std::size_t depth() const { return coefficients_.size() - 1; }
    const NormSequence& power_norms() const { return power_norms_; }
    const TypeEstimate& sigma() const { return sigma_; }
    const LogNorm& radius() const { return radius_; }
    const AlphaCertificate& alpha_certificate() const { return cert_; }

private:
    Op op_;
    std::vector<E> coefficients_;
    NormSequence power_norms_;
    TypeEstimate sigma_;
    LogNorm radius_;
    AlphaCertificate cert_;
};

/// Builds the series solution to depth K. The divisions by k are performed
/// incrementally, so each step pays exactly v_p(k) digits of absolute
/// precision; start from inputs embedded at working_precision(N, K, p) to
/// retain N digits in every coefficient.
template <typename Op, typename E>
    requires BoundedOperator<Op, E>
SeriesSolution<Op, E> build_solution(const Op& op, const E& y0, std::size_t K,
                                     std::size_t window = 0) {
    if (K < 4) throw InsufficientDepth("series depth must be >= 4");
    if (window == 0) window = default_window(K);

    std::vector<E> coeffs;
    coeffs.reserve(K + 1);
    coeffs.push_back(y0);

    NormSequence powers;
    powers.norms.reserve(K + 1);
    E power = y0;  // A^k y0, undivided, for exact norm tracking
    for (std::size_t k = 0; k <= K; ++k) {
        if (power.is_exact_zero()) {
            powers.eventually_zero = true;
            for (std::size_t j = k; j <= K; ++j) powers.norms.push_back(LogNorm::zero());
            break;
        }
        try {
            powers.norms.push_back(power.norm());
        } catch (const PrecisionExhausted& e) {
            throw PrecisionExhausted(
                "series build lost all precision at k=" + std::to_string(k) + " (" + e.what() + ")",
                k);
        }
        if (k < K) power = op.apply(power);
    }
    for (std::size_t k = 1; k <= K; ++k)
        coeffs.push_back(op.apply(coeffs.back()).divided_by_integer(BigInt(k)));

    TypeEstimate sigma = estimate_type(powers, window);
    const LogNorm radius = sigma.sigma.is_zero()
                               ? LogNorm::unbounded()
                               : radius_constant(op.prime()) / sigma.sigma;

    AlphaCertificate cert;
    cert.depth = K;
    if (powers.eventually_zero) {
        // The tail is exactly zero beyond the nilpotency index.
        cert.alpha = LogNorm::zero();
        cert.scale = LogNorm::one();
    } else {
        std::optional<BigRational> alpha_exp;
        for (std::size_t k = 1; k <= K; ++k) {
            BigRational r = powers.ratio(k);
            if (!alpha_exp || r > *alpha_exp) alpha_exp = std::move(r);
        }
        cert.alpha = LogNorm::from_exponent(*alpha_exp);
        LogNorm scale = LogNorm::zero();
        for (std::size_t k = 0; k <= K; ++k)
            scale = LogNorm::max(scale, powers.at(k) / cert.alpha.pow(static_cast<std::int64_t>(k)));
        cert.scale = scale;
    }
    return SeriesSolution<Op, E>(op, std::move(coeffs), std::move(powers), std::move(sigma),
                                 radius, std::move(cert));
}

/// Convergence radius read off the coefficients alone: the negated window
/// limsup of exponent(‖c_n‖)/n. Coefficients that are exactly zero across the
/// whole window mean the series terminated (unbounded radius).
template <typename E>
    requires BanachElement<E>
LogNorm radius_from_coefficients(const std::vector<E>& coeffs, std::size_t window = 0) {
    if (coeffs.size() < 5) throw InsufficientDepth("radius estimate needs depth >= 4");
    const std::size_t depth = coeffs.size() - 1;
    if (window == 0) window = default_window(depth);
    const std::size_t lo = std::max<std::size_t>(1, depth - window + 1);
    std::optional<BigRational> best;
    for (std::size_t k = lo; k <= depth; ++k) {
        if (coeffs[k].is_exact_zero()) continue;
        BigRational r = coeffs[k].norm().exponent() / BigRational(static_cast<std::int64_t>(k));
        if (!best || r > *best) best = std::move(r);
    }
    if (!best) return LogNorm::unbounded();
    return LogNorm::from_exponent(-*best);
}

template <typename Op, typename E>
    requires BoundedOperator<Op, E>
LogNorm radius_from_coefficients(const SeriesSolution<Op, E>& sol, std::size_t window = 0) {
    return radius_from_coefficients(sol.coefficients(), window);
}

namespace detail {

/// Per-step tail magnitude alpha * |z| * p^{1/(p-1)} and the resulting bound
/// scale * per_step^{K+1} * |z|^{-shift} (shift = 1 for the derivative series,
/// whose k-th term carries z^{k-1}).
inline LogNorm geometric_tail(const AlphaCertificate& cert, const LogNorm& z_norm, const Prime& p,
                              std::size_t K, int z_shift = 0) {
    if (cert.alpha.is_zero() || z_norm.is_zero()) return LogNorm::zero();
    const LogNorm per_step = cert.alpha * z_norm * factorial_growth_rate(p);
    if (!(per_step < LogNorm::one())) return LogNorm::unbounded();
    LogNorm bound = cert.scale * per_step.pow(static_cast<std::int64_t>(K) + 1);
    for (int i = 0; i < z_shift; ++i) bound = bound / z_norm;
    return bound;
}

template <typename E>
E horner_sum(const std::vector<E>& coeffs, const PadicNumber& z) {
    E acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc.scaled(z) + coeffs[k];
    return acc;
}

}  // namespace detail

/// Partial sum sum_{k<=K} c_k z^k plus a certified bound on the discarded
/// tail. Refuses points on or outside the convergence radius: terms of a
/// non-archimedean series outside the disk do not tend to zero, so no partial
/// answer would mean anything.
template <typename Op, typename E>
    requires BoundedOperator<Op, E>
Evaluation<E> evaluate(const SeriesSolution<Op, E>& sol, const PadicNumber& z) {
    if (z.prime() != sol.prime()) throw PrimeMismatch();
    if (!Disk::open(sol.radius()).contains(z))
        throw OutsideDisk("evaluation point is not inside the convergence disk");
    E value = detail::horner_sum(sol.coefficients(), z);
    TailBound tail{sol.depth(), detail::geometric_tail(sol.alpha_certificate(),
                                                       z.norm_upper_bound(), sol.prime(),
                                                       sol.depth())};
    return {std::move(value), std::move(tail)};
}

/// Certified upper bound on ‖y'(z) - A y(z)‖ computed from the two
/// independently truncated series (the derivative series and A applied to
/// the evaluated partial sum).
template <typename Op, typename E>
    requires BoundedOperator<Op, E>
LogNorm residual(const SeriesSolution<Op, E>& sol, const PadicNumber& z) {
    if (z.prime() != sol.prime()) throw PrimeMismatch();
    if (!Disk::open(sol.radius()).contains(z))
        throw OutsideDisk("evaluation point is not inside the convergence disk");
    const auto& c = sol.coefficients();
    std::vector<E> derivative;
    derivative.reserve(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        derivative.push_back(c[k].times_integer(BigInt(k)));
    const E lhs = detail::horner_sum(derivative, z);
    const E rhs = sol.op().apply(detail::horner_sum(c, z));
    return (lhs - rhs).norm_upper_bound();
}

/// The tail allowance the residual must respect: the derivative-series tail
/// combined with ‖A‖ times the evaluation tail.
template <typename Op, typename E>
    requires BoundedOperator<Op, E>
LogNorm residual_tail_allowance(const SeriesSolution<Op, E>& sol, const PadicNumber& z) {
    const LogNorm z_norm = z.norm_upper_bound();
    const LogNorm tail_y =
        detail::geometric_tail(sol.alpha_certificate(), z_norm, sol.prime(), sol.depth());
    const LogNorm tail_dy =
        detail::geometric_tail(sol.alpha_certificate(), z_norm, sol.prime(), sol.depth(), 1);
    const LogNorm a_bound = sol.op().norm_bound();
    if (tail_y.is_zero()) return tail_dy;
    return LogNorm::max(a_bound * tail_y, tail_dy);
}

struct WellPosednessRow {
    std::size_t perturbation = 0;
    std::int64_t shell = 0;  // |z| = p^{-shell}
    LogNorm lhs = LogNorm::zero();       // certified bound on ‖y_n(z) - y(z)‖
    LogNorm rhs_norm = LogNorm::zero();  // ‖y_{n,0} - y_0‖_alpha (the 1/eps factor is separate)
    bool pass = false;
    std::optional<BigRational> margin;   // exponent of rhs/lhs, absent when lhs = 0
};

struct WellPosednessReport {
    LogNorm alpha = LogNorm::zero();
    LogNorm delta = LogNorm::unbounded();  // p^{-1/(p-1)} / alpha
    BigRational epsilon;
    std::size_t depth = 0;
    std::vector<WellPosednessRow> rows;
    bool all_pass = true;
    std::optional<BigRational> worst_margin;
};

/// Verifies the continuity estimate ‖y_n(z) - y(z)‖ <= (1/eps) ‖y_{n,0} - y_0‖_alpha
/// for each perturbed initial vector, with alpha instantiated as the operator
/// norm bound (then ‖d‖_alpha = ‖d‖ exactly) and z sampled one point per norm
/// shell p^{-m} inside the disk of radius (1 - eps) * delta. Ultrametric norms
/// are locally constant, so one point per shell carries full information.
template <typename Op, typename E>
    requires BoundedOperator<Op, E>
WellPosednessReport wellposedness_check(const Op& op, const E& y0,
                                        const std::vector<E>& perturbed_initials,
                                        const BigRational& epsilon, std::size_t K,
                                        std::size_t shells = 4, std::size_t window = 0) {
    if (epsilon <= 0 || epsilon >= 1) throw Error("epsilon must lie in (0, 1)");
    const Prime p = op.prime();

    WellPosednessReport report;
    report.alpha = op.norm_bound();
    report.delta = report.alpha.is_zero() ? LogNorm::unbounded()
                                          : radius_constant(p) / report.alpha;
    report.epsilon = epsilon;
    report.depth = K;

    // Smallest m with p^{-m} <= (1 - eps) * delta.
    std::int64_t m_start = 0;
    if (report.delta.is_finite()) {
        const BigRational& de = report.delta.exponent();
        const BigInt num = boost::multiprecision::numerator(de);
        const BigInt den = boost::multiprecision::denominator(de);
        m_start = static_cast<std::int64_t>(-num / den) - 2;
        const BigRational one_minus_eps = BigRational(1) - epsilon;
        while (!(LogNorm::from_exponent(BigRational(-m_start) - de)).leq_rational(one_minus_eps, p))
            ++m_start;
    }

    const BigRational inv_eps = BigRational(1) / epsilon;
    for (std::size_t i = 0; i < perturbed_initials.size(); ++i) {
        const E d = perturbed_initials[i] - y0;
        const LogNorm rhs = d.norm();  // = ‖d‖_alpha at alpha = ‖A‖
        if (d.is_exact_zero()) {
            WellPosednessRow row{i, m_start, LogNorm::zero(), rhs, true, std::nullopt};
            report.rows.push_back(std::move(row));
            continue;
        }
        const auto diff = build_solution(op, d, K, window);
        // ‖A^k d‖ <= ‖d‖ ‖A‖^k holds for every k (not only up to the
        // truncation), so the tail of the difference series can be bounded by
        // this certificate instead of the finite-data one.
        const AlphaCertificate cert{report.alpha, rhs, K};
        for (std::size_t s = 0; s < shells; ++s) {
            const std::int64_t m = m_start + static_cast<std::int64_t>(s);
            // z = p^m exactly; the partial sum is computed with exact scalar
            // shifts, so no precision is spent on the sample point.
            E partial = diff.coefficients().back();
            for (std::size_t k = diff.coefficients().size() - 1; k-- > 0;) {
                partial = m >= 0 ? partial.times_integer(p.power(m))
                                 : partial.divided_by_integer(p.power(-m));
                partial = partial + diff.coefficients()[k];
            }
            const LogNorm z_norm = LogNorm::from_exponent(-m);
            const LogNorm tail = detail::geometric_tail(cert, z_norm, p, K);
            const LogNorm lhs = LogNorm::max(partial.norm_upper_bound(), tail);

            WellPosednessRow row;
            row.perturbation = i;
            row.shell = m;
            row.lhs = lhs;
            row.rhs_norm = rhs;
            row.pass = (lhs / rhs).leq_rational(inv_eps, p);
            if (!lhs.is_zero() && lhs.is_finite() && rhs.is_finite())
                row.margin = rhs.exponent() - lhs.exponent();
            if (!row.pass) report.all_pass = false;
            if (row.margin && (!report.worst_margin || *row.margin < *report.worst_margin))
                report.worst_margin = row.margin;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace padic
