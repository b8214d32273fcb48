#include "padic/oracle.hpp"

#include "padic/errors.hpp"

namespace padic::oracle {

Valuation rational_valuation(const ExactRational& q, const Prime& p) {
    if (q == 0) return Valuation::infinity();
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    return Valuation::finite(int_valuation(num, p.big()) - int_valuation(den, p.big()));
}

std::vector<ExactRational> exact_series_partial_sum(const std::vector<ExactRational>& matrix,
                                                    std::size_t n,
                                                    const std::vector<ExactRational>& y0,
                                                    const ExactRational& z, std::size_t K) {
    if (matrix.size() != n * n || y0.size() != n) throw Error("oracle: dimension mismatch");
    std::vector<ExactRational> power = y0;        // A^k y0
    std::vector<ExactRational> sum = y0;          // k = 0 term
    ExactRational z_pow = 1;
    BigInt k_factorial = 1;
    for (std::size_t k = 1; k <= K; ++k) {
        std::vector<ExactRational> next(n, ExactRational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) next[i] += matrix[i * n + j] * power[j];
        power = std::move(next);
        z_pow *= z;
        k_factorial *= static_cast<unsigned long>(k);
        const ExactRational scale = z_pow / ExactRational(k_factorial);
        for (std::size_t i = 0; i < n; ++i) sum[i] += power[i] * scale;
    }
    return sum;
}

PadicNumber reduce_mod_pN(const ExactRational& q, const Prime& p, std::int64_t precision) {
    if (q == 0) return PadicNumber::exact_zero(p);
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    const std::int64_t v = remove_factor(num, p.big()) - remove_factor(den, p.big());

    // Long division in base p: digit_i = (current * den^{-1}) mod p, then
    // shift the remainder down one power.
    const BigInt pb = p.big();
    const BigInt den_inv_mod_p = mod_inverse(mod_reduce(den, pb), pb);
    BigInt current = num;
    BigInt unit = 0;
    BigInt place = 1;
    for (std::int64_t i = 0; i < precision; ++i) {
        const BigInt digit = mod_reduce(mod_reduce(current, pb) * den_inv_mod_p, pb);
        unit += digit * place;
        place *= pb;
        current = (current - digit * den) / pb;
        if (current == 0) break;
    }
    PadicNumber u = PadicNumber::from_integer(unit, p, precision);
    return v >= 0 ? u.times_integer(p.power(v)) : u.divided_by_integer(p.power(-v));
}

std::int64_t factorial_valuation_by_factorization(std::uint64_t n, const Prime& p) {
    std::int64_t total = 0;
    const auto pv = static_cast<std::uint64_t>(p.value());
    for (std::uint64_t k = 2; k <= n; ++k) {
        std::uint64_t m = k;
        while (m % pv == 0) {
            m /= pv;
            ++total;
        }
    }
    return total;
}

BigInt big_factorial(std::uint64_t n) {
    BigInt f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
    return f;
}

}  // namespace padic::oracle
