#include "padic/exp_type.hpp"

namespace padic {

std::optional<TypeEstimate> closed_form_type(const MatrixOperator& A, const Vector& x) {
    const std::size_t n = A.dimension();
    if (x.size() != n) return std::nullopt;

    std::int64_t v_min = 0;
    bool have_diag = false;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& d = A.at(i, i);
        if (!d.is_nonzero()) return std::nullopt;
        const std::int64_t v = d.valuation().value();
        if (!have_diag || v < v_min) v_min = v;
        have_diag = true;
    }
    // Strictly dominated off-diagonal part; lower triangle must vanish.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& e = A.at(i, j);
            if (e.is_exact_zero()) continue;
            if (i > j) return std::nullopt;
            if (!e.is_nonzero()) return std::nullopt;
            if (e.valuation().value() <= v_min) return std::nullopt;
        }

    std::int64_t x_min = 0;
    bool have_x = false;
    std::optional<std::int64_t> x_at_minimal_diag;
    for (std::size_t i = 0; i < n; ++i) {
        if (!x[i].is_nonzero()) return std::nullopt;
        const std::int64_t v = x[i].valuation().value();
        if (!have_x || v < x_min) x_min = v;
        have_x = true;
        if (A.at(i, i).valuation().value() == v_min)
            x_at_minimal_diag = x_at_minimal_diag ? std::min(*x_at_minimal_diag, v) : v;
    }
    if (!x_at_minimal_diag || *x_at_minimal_diag != x_min) return std::nullopt;

    return TypeEstimate{LogNorm::from_exponent(-v_min), TypeEstimate::Method::exact_closed_form,
                        0, 0};
}

}  // namespace padic
