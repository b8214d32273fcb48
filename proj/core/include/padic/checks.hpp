#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace padic::checks {

/// Outcome of one verification suite. `details` is deterministic for fixed
/// parameters (all randomness is seeded), so reports embedding it are
/// byte-stable.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

/// Factorial valuations against the direct-factorization oracle for
/// n <= max_n and p in {2, 3, 5, 7, 11}.
CheckResult legendre_suite(std::uint64_t max_n = 2000);

/// |v_p(n!)/n - 1/(p-1)| < 1/500 at n (exact rational arithmetic).
CheckResult factorial_asymptotics_suite(std::uint64_t n = 10000);

/// Ultrametric and multiplicativity laws of the scalar arithmetic on random
/// pairs (equality case included).
CheckResult ultrametric_suite(std::size_t pairs = 10000, std::uint64_t seed = 0x5eed01);

/// sigma * r = p^{-1/(p-1)}: coefficient-based radius against the closed-form
/// type on random diagonal/dominated-triangular instances, exponent tolerance
/// 2/K.
CheckResult radius_law_suite(std::size_t instances = 50, std::size_t K = 64,
                             std::uint64_t seed = 0x5eed03);

/// Truncated evaluations against the exact rational partial sums, digit-exact
/// at the reported precision.
CheckResult oracle_equivalence_suite(std::size_t instances = 25, std::uint64_t seed = 0x5eed04);

/// Residual bounds and depth-K vs depth-(K+10) differences against the
/// certified tail bounds, on the same instance family as the oracle suite.
CheckResult tail_soundness_suite(std::size_t instances = 25, std::uint64_t seed = 0x5eed04);

/// ‖y_n(z) - y(z)‖ <= (1/eps) ‖y_{n,0} - y_0‖_alpha over random perturbations,
/// eps in {1/2, 1/4}, all shell-sampled z.
CheckResult wellposedness_suite(std::size_t bases = 10, std::size_t perturbations_per_base = 10,
                                std::uint64_t seed = 0x5eed06);

/// Derivative norm bound and submultiplicativity on random polynomials,
/// exact exponent comparisons.
CheckResult analytic_norm_suite(std::size_t polynomials = 1000, std::uint64_t seed = 0x5eed07);

/// Transport and reaction model problems: exact termination and agreement of
/// exp-series partial sums with the oracle for every depth K <= 40.
CheckResult pde_exactness_suite();

/// Solution radius >= p^{-1/(p-1)} / ‖A‖ on random bounded instances.
CheckResult corollary_bound_suite(std::size_t instances = 50, std::size_t K = 64,
                                  std::uint64_t seed = 0x5eed09);

/// All suites in acceptance order.
std::vector<CheckResult> run_all();

}  // namespace padic::checks
