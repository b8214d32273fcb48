#pragma once

#include <cstdint>
#include <utility>

#include "padic/analytic.hpp"
#include "padic/cauchy.hpp"
#include "padic/diff_operator.hpp"
#include "padic/vector.hpp"

namespace padic {

/// The evolution problem du/dt = sum_beta a_beta(x) D^beta u, u(0, x) = phi,
/// posed as an abstract Cauchy problem for the bounded operator on A_rho. The
/// module contains no solver logic of its own: it is a reduction to the
/// series solver, which is where the analysis lives.
struct PdeProblem {
    DifferentialOperator op;
    AnalyticFunction initial;
    std::size_t time_depth;

    PdeProblem(DifferentialOperator o, AnalyticFunction phi, std::size_t K)
        : op(std::move(o)), initial(std::move(phi)), time_depth(K) {
        if (initial.prime() != op.prime() || initial.variables() != op.variables() ||
            initial.rho_exponent() != op.rho_exponent() ||
            initial.truncation_degree() != op.truncation_degree())
            throw SpaceMismatch("initial datum lives in a different function space");
    }
};

/// u(t, x) = sum_k u_k(x) t^k with u_0 = phi and k u_k = A u_{k-1}, plus the
/// disk in the t variable on which the bound max_beta rho^{-|beta|} ‖a_beta‖
/// certifies convergence.
struct PdeSolution {
    SeriesSolution<DifferentialOperator, AnalyticFunction> series;
    Disk time_disk;

    const std::vector<AnalyticFunction>& time_coefficients() const {
        return series.coefficients();
    }
};

/// Open disk |t| < p^{-1/(p-1)} / max_beta rho^{-|beta|} ‖a_beta‖_rho;
/// unbounded for the zero operator.
inline Disk convergence_disk(const DifferentialOperator& op) {
    const LogNorm bound = op.norm_bound();
    if (bound.is_zero()) return Disk::open(LogNorm::unbounded());
    return Disk::open(radius_constant(op.prime()) / bound);
}

inline PdeSolution solve_pde(const PdeProblem& prob) {
    return PdeSolution{build_solution(prob.op, prob.initial, prob.time_depth),
                       convergence_disk(prob.op)};
}

/// Partial sum sum_{k<=K} u_k t^k as an element of A_rho, with the series
/// tail folded into the truncation norm. Requires t inside the certified
/// time disk.
inline AnalyticFunction evaluate_in_time(const PdeSolution& sol, const PadicNumber& t) {
    if (!sol.time_disk.contains(t))
        throw OutsideDisk("time point is not inside the certified convergence disk");
    const auto ev = evaluate(sol.series, t);
    if (ev.tail.bound.is_unbounded())
        throw OutsideDisk("tail bound is not finite at this time point");
    return ev.value.with_truncation_norm(ev.tail.bound);
}

}  // namespace padic
