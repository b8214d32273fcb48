#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/errors.hpp"
#include "padic/lognorm.hpp"
#include "padic/matrix.hpp"
#include "padic/operators.hpp"

namespace padic {

inline std::size_t default_window(std::size_t depth) { return depth / 4 ? depth / 4 : 1; }

/// The magnitudes ‖A^k x‖ for k = 0..depth. Once an exact zero vector is
/// reached every later entry is the zero magnitude and `eventually_zero`
/// is set (the sequence can never leave zero again).
struct NormSequence {
    std::vector<LogNorm> norms;
    bool eventually_zero = false;

    std::size_t depth() const { return norms.size() - 1; }
    const LogNorm& at(std::size_t k) const { return norms.at(k); }
    /// e_k / k for k >= 1 (requires a finite entry).
    BigRational ratio(std::size_t k) const {
        return norms.at(k).exponent() / BigRational(static_cast<std::int64_t>(k));
    }
};

template <typename Op, typename E>
    requires BoundedOperator<Op, E>
NormSequence norm_sequence(const Op& op, const E& x, std::size_t K) {
    if (K < 1) throw InsufficientDepth("norm sequence needs depth >= 1");
    NormSequence seq;
    seq.norms.reserve(K + 1);
    E current = x;
    for (std::size_t k = 0; k <= K; ++k) {
        if (current.is_exact_zero()) {
            seq.eventually_zero = true;
            for (std::size_t j = k; j <= K; ++j) seq.norms.push_back(LogNorm::zero());
            return seq;
        }
        try {
            seq.norms.push_back(current.norm());
        } catch (const PrecisionExhausted& e) {
            throw PrecisionExhausted("power norms lost all precision at k=" + std::to_string(k) +
                                         " (" + e.what() + ")",
                                     k);
        }
        if (k < K) current = op.apply(current);
    }
    return seq;
}

/// An estimate of the type sigma(x; A) = limsup ‖A^n x‖^{1/n}. The limsup is
/// not computable from finite data in general; the window estimator takes the
/// max of e_k/k over the trailing `window` indices and is exact for the
/// closed-form families (eventually-zero, diagonal, dominated triangular).
struct TypeEstimate {
    enum class Method { exact_closed_form, eventually_zero, window_limsup };

    LogNorm sigma;
    Method method;
    std::size_t window = 0;
    std::size_t depth = 0;

    std::string method_str() const {
        switch (method) {
            case Method::exact_closed_form: return "exact_closed_form";
            case Method::eventually_zero: return "eventually_zero";
            default: return "window_limsup";
        }
    }
};

inline TypeEstimate estimate_type(const NormSequence& seq, std::size_t window) {
    if (window < 1 || seq.depth() < window)
        throw InsufficientDepth("type estimate needs depth >= window >= 1");
    if (seq.eventually_zero)
        return {LogNorm::zero(), TypeEstimate::Method::eventually_zero, window, seq.depth()};
    const std::size_t depth = seq.depth();
    const std::size_t lo = depth >= window ? std::max<std::size_t>(1, depth - window + 1) : 1;
    std::optional<BigRational> best;
    for (std::size_t k = lo; k <= depth; ++k) {
        BigRational r = seq.ratio(k);
        if (!best || r > *best) best = std::move(r);
    }
    return {LogNorm::from_exponent(*best), TypeEstimate::Method::window_limsup, window, depth};
}

/// Exact type for an upper-triangular matrix whose off-diagonal entries all
/// have valuation strictly above the minimal diagonal valuation, applied to a
/// vector with no zero entry whose minimum valuation is attained in a row
/// where the diagonal attains its minimum. Under these conditions
/// ‖A^k x‖ = p^{-k v_min - v(x_row)} exactly for every k, so
/// sigma = p^{-v_min} with no truncation error.
std::optional<TypeEstimate> closed_form_type(const MatrixOperator& A, const Vector& x);

/// sup_k ‖A^k x‖ / alpha^k truncated at depth K. `certified` is set when the
/// truncated sup is provably the true sup (the type estimate sits strictly
/// below alpha and the per-k values are non-increasing over the final
/// window).
struct AlphaNormResult {
    LogNorm value;
    bool certified;
    std::size_t depth;
};

enum class Membership { member, non_member_at_depth, undecided };

inline const char* membership_str(Membership m) {
    switch (m) {
        case Membership::member: return "member";
        case Membership::non_member_at_depth: return "non_member_at_depth";
        default: return "undecided";
    }
}

namespace detail {

/// e_k - k*alpha_exp as LogNorm magnitudes (‖A^k x‖ / alpha^k).
inline std::vector<LogNorm> alpha_ratios(const NormSequence& seq, const LogNorm& alpha) {
    std::vector<LogNorm> f;
    f.reserve(seq.norms.size());
    for (std::size_t k = 0; k < seq.norms.size(); ++k)
        f.push_back(seq.at(k) / alpha.pow(static_cast<std::int64_t>(k)));
    return f;
}

}  // namespace detail

template <typename Op, typename E>
    requires BoundedOperator<Op, E>
AlphaNormResult alpha_norm(const Op& op, const E& x, const LogNorm& alpha, std::size_t K,
                           std::size_t window = 0) {
    if (!alpha.is_finite()) throw Error("alpha must be a finite positive magnitude");
    if (window == 0) window = default_window(K);
    if (K < window) throw InsufficientDepth("alpha norm needs depth >= window");
    if (x.is_exact_zero()) return {LogNorm::zero(), true, K};

    const NormSequence seq = norm_sequence(op, x, K);
    const auto f = detail::alpha_ratios(seq, alpha);
    LogNorm sup = LogNorm::zero();
    for (const auto& v : f) sup = LogNorm::max(sup, v);

    if (seq.eventually_zero) return {sup, true, K};

    const std::size_t lo = std::max<std::size_t>(1, K - window + 1);
    bool growing = true, non_increasing = true;
    for (std::size_t k = lo; k <= K; ++k) {
        if (!(f[k - 1] < f[k])) growing = false;
        if (f[k - 1] < f[k]) non_increasing = false;
    }
    if (growing && !(f[K] < sup))
        throw NotInEAlpha("norm sequence still growing against alpha at depth " +
                          std::to_string(K));

    const TypeEstimate est = estimate_type(seq, window);
    const bool certified = est.sigma < alpha && non_increasing;
    return {sup, certified, K};
}

/// Three-valued membership of x in E_alpha(A), decided from depth-K data.
/// The exists-a-constant quantifier cannot be decided at finite depth, so a
/// `member` verdict needs the type estimate strictly below alpha (or an
/// eventually-zero sequence) and a negative verdict is explicitly
/// depth-qualified.
template <typename Op, typename E>
    requires BoundedOperator<Op, E>
Membership e_alpha_member(const Op& op, const E& x, const LogNorm& alpha, std::size_t K,
                          std::size_t window = 0) {
    if (!alpha.is_finite()) throw Error("alpha must be a finite positive magnitude");
    if (window == 0) window = default_window(K);
    if (K < window) throw InsufficientDepth("membership needs depth >= window");
    if (x.is_exact_zero()) return Membership::member;

    const NormSequence seq = norm_sequence(op, x, K);
    if (seq.eventually_zero) return Membership::member;

    const TypeEstimate est = estimate_type(seq, window);
    if (est.sigma < alpha) return Membership::member;

    const std::size_t lo = std::max<std::size_t>(1, K - window + 1);
    bool all_above = true;
    for (std::size_t k = lo; k <= K && all_above; ++k)
        if (!(seq.ratio(k) > alpha.exponent())) all_above = false;
    if (all_above) return Membership::non_member_at_depth;

    return Membership::undecided;
}

}  // namespace padic
