#include "padic/analytic.hpp"

#include <cctype>
#include <sstream>

#include "padic/errors.hpp"

namespace padic {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
    std::vector<std::uint32_t> e(n, 0);
    e.at(j) = 1;
    return MultiIndex(std::move(e));
}

std::int64_t MultiIndex::total() const {
    std::int64_t t = 0;
    for (auto x : e_) t += x;
    return t;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
    if (e_.size() != other.e_.size()) throw SpaceMismatch("multi-index sizes differ");
    std::vector<std::uint32_t> out(e_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.e_[i];
    return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::plus_unit(std::size_t j) const {
    std::vector<std::uint32_t> out(e_);
    out.at(j) += 1;
    return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::minus_unit(std::size_t j) const {
    std::vector<std::uint32_t> out(e_);
    if (out.at(j) == 0) throw Error("multi-index exponent underflow");
    out[j] -= 1;
    return MultiIndex(std::move(out));
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    for (std::size_t i = 0; i < std::min(a.e_.size(), b.e_.size()); ++i)
        if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
    return a.e_.size() <=> b.e_.size();
}

std::string MultiIndex::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << "x" << (i + 1);
        if (e_[i] > 1) out << "^" << e_[i];
    }
    return first ? "1" : out.str();
}

AnalyticFunction::AnalyticFunction(const Prime& p, std::size_t variables, BigRational rho_exponent,
                                   std::int64_t truncation_degree)
    : prime_(p),
      variables_(variables),
      rho_exponent_(std::move(rho_exponent)),
      truncation_degree_(truncation_degree) {
    if (variables_ == 0) throw SpaceMismatch("function space needs at least one variable");
    if (truncation_degree_ < 0) throw SpaceMismatch("truncation degree must be >= 0");
}

AnalyticFunction AnalyticFunction::constant(const PadicNumber& c, std::size_t variables,
                                            const BigRational& rho_exponent,
                                            std::int64_t truncation_degree) {
    return monomial(c, MultiIndex::zero(variables), rho_exponent, truncation_degree);
}

AnalyticFunction AnalyticFunction::monomial(const PadicNumber& c, const MultiIndex& index,
                                            const BigRational& rho_exponent,
                                            std::int64_t truncation_degree) {
    AnalyticFunction f(c.prime(), index.variables(), rho_exponent, truncation_degree);
    if (index.total() > truncation_degree)
        throw SpaceMismatch("monomial degree exceeds the truncation degree");
    f.insert_term(index, c);
    return f;
}

void AnalyticFunction::insert_term(const MultiIndex& index, const PadicNumber& value) {
    if (index.variables() != variables_) throw SpaceMismatch("multi-index arity mismatch");
    if (index.total() > truncation_degree_) throw SpaceMismatch("term above truncation degree");
    if (value.is_exact_zero()) return;
    coeffs_.insert_or_assign(index, value);
}

void AnalyticFunction::check_same_space(const AnalyticFunction& other) const {
    if (prime_ != other.prime_) throw PrimeMismatch();
    if (variables_ != other.variables_ || rho_exponent_ != other.rho_exponent_ ||
        truncation_degree_ != other.truncation_degree_)
        throw SpaceMismatch("operands live in different function spaces");
}

PadicNumber AnalyticFunction::coefficient(const MultiIndex& index) const {
    const auto it = coeffs_.find(index);
    return it == coeffs_.end() ? PadicNumber::exact_zero(prime_) : it->second;
}

std::int64_t AnalyticFunction::degree() const {
    std::int64_t d = -1;
    for (const auto& [index, value] : coeffs_) d = std::max(d, index.total());
    return d;
}

LogNorm AnalyticFunction::norm() const {
    LogNorm best = truncation_norm_;
    for (const auto& [index, value] : coeffs_) {
        const LogNorm weight = LogNorm::from_exponent(rho_exponent_ * index.total());
        best = LogNorm::max(best, value.norm_upper_bound() * weight);
    }
    return best;
}

std::optional<MultiIndex> AnalyticFunction::norm_witness() const {
    std::optional<MultiIndex> witness;
    LogNorm best = LogNorm::zero();
    for (const auto& [index, value] : coeffs_) {
        if (!value.is_nonzero()) continue;
        const LogNorm term = value.norm() * LogNorm::from_exponent(rho_exponent_ * index.total());
        if (!witness || best < term) {
            best = term;
            witness = index;
        }
    }
    if (!witness || best < truncation_norm_) return std::nullopt;
    for (const auto& [index, value] : coeffs_)
        if (value.is_zero_at_precision() &&
            best < value.norm_upper_bound() * LogNorm::from_exponent(rho_exponent_ * index.total()))
            return std::nullopt;
    return witness;
}

AnalyticFunction AnalyticFunction::operator-() const {
    AnalyticFunction out(prime_, variables_, rho_exponent_, truncation_degree_);
    out.truncation_norm_ = truncation_norm_;
    for (const auto& [index, value] : coeffs_) out.coeffs_.emplace(index, -value);
    return out;
}

AnalyticFunction operator+(const AnalyticFunction& f, const AnalyticFunction& g) {
    f.check_same_space(g);
    AnalyticFunction out(f.prime_, f.variables_, f.rho_exponent_, f.truncation_degree_);
    out.truncation_norm_ = LogNorm::max(f.truncation_norm_, g.truncation_norm_);
    for (const auto& [index, value] : f.coeffs_) {
        const auto it = g.coeffs_.find(index);
        out.insert_term(index, it == g.coeffs_.end() ? value : value + it->second);
    }
    for (const auto& [index, value] : g.coeffs_)
        if (f.coeffs_.find(index) == f.coeffs_.end()) out.insert_term(index, value);
    return out;
}

AnalyticFunction operator-(const AnalyticFunction& f, const AnalyticFunction& g) {
    return f + (-g);
}

AnalyticFunction operator*(const AnalyticFunction& f, const AnalyticFunction& g) {
    return multiply(f, g);
}

AnalyticFunction AnalyticFunction::scaled(const PadicNumber& s) const {
    if (s.prime() != prime_) throw PrimeMismatch();
    AnalyticFunction out(prime_, variables_, rho_exponent_, truncation_degree_);
    out.truncation_norm_ = truncation_norm_ * s.norm_upper_bound();
    for (const auto& [index, value] : coeffs_) out.insert_term(index, value * s);
    return out;
}

AnalyticFunction AnalyticFunction::times_integer(const BigInt& t) const {
    AnalyticFunction out(prime_, variables_, rho_exponent_, truncation_degree_);
    if (t == 0) return out;
    BigInt u = t;
    const std::int64_t w = remove_factor(u, prime_.big());
    out.truncation_norm_ = truncation_norm_ * LogNorm::from_exponent(-w);
    for (const auto& [index, value] : coeffs_) out.insert_term(index, value.times_integer(t));
    return out;
}

AnalyticFunction AnalyticFunction::divided_by_integer(const BigInt& t) const {
    if (t == 0) throw DivisionByZero();
    AnalyticFunction out(prime_, variables_, rho_exponent_, truncation_degree_);
    BigInt u = t;
    const std::int64_t w = remove_factor(u, prime_.big());
    out.truncation_norm_ = truncation_norm_ * LogNorm::from_exponent(w);
    for (const auto& [index, value] : coeffs_) out.insert_term(index, value.divided_by_integer(t));
    return out;
}

AnalyticFunction AnalyticFunction::with_truncation_norm(const LogNorm& bound) const {
    AnalyticFunction out = *this;
    out.truncation_norm_ = LogNorm::max(out.truncation_norm_, bound);
    return out;
}

AnalyticFunction partial_derivative(const AnalyticFunction& f, std::size_t j) {
    if (j < 1 || j > f.variables()) throw SpaceMismatch("variable index out of range");
    const std::size_t jj = j - 1;
    AnalyticFunction out(f.prime(), f.variables(), f.rho_exponent(), f.truncation_degree());
    // ‖df/dx_j‖ <= rho^{-1} ‖f‖ applies to the discarded tail as well.
    out.truncation_norm_ = f.truncation_norm() * LogNorm::from_exponent(-f.rho_exponent());
    for (const auto& [index, value] : f.coefficients()) {
        if (index[jj] == 0) continue;
        out.insert_term(index.minus_unit(jj), value.times_integer(index[jj]));
    }
    return out;
}

AnalyticFunction multiply(const AnalyticFunction& f, const AnalyticFunction& g) {
    f.check_same_space(g);
    AnalyticFunction out(f.prime_, f.variables_, f.rho_exponent_, f.truncation_degree_);

    const LogNorm f_norm = f.norm();
    const LogNorm g_norm = g.norm();
    LogNorm spill = LogNorm::max(f.truncation_norm_ * g_norm, f_norm * g.truncation_norm_);

    std::map<MultiIndex, PadicNumber> acc;
    for (const auto& [fi, fv] : f.coeffs_) {
        for (const auto& [gi, gv] : g.coeffs_) {
            const MultiIndex index = fi.plus(gi);
            if (index.total() > f.truncation_degree_) {
                const LogNorm term =
                    fv.norm_upper_bound() * gv.norm_upper_bound() *
                    LogNorm::from_exponent(f.rho_exponent_ * index.total());
                spill = LogNorm::max(spill, term);
                continue;
            }
            const PadicNumber prod = fv * gv;
            const auto it = acc.find(index);
            if (it == acc.end())
                acc.emplace(index, prod);
            else
                it->second = it->second + prod;
        }
    }
    for (const auto& [index, value] : acc) out.insert_term(index, value);
    out.truncation_norm_ = LogNorm::max(out.truncation_norm_, spill);
    return out;
}

std::string AnalyticFunction::str() const {
    if (coeffs_.empty() && truncation_norm_.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [index, value] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        const auto q = value.try_to_rational();
        const std::string mono = index.str();
        if (q) {
            if (*q == 1 && mono != "1")
                out << mono;
            else if (*q == -1 && mono != "1")
                out << "-" << mono;
            else {
                out << rational_to_string(*q);
                if (mono != "1") out << "*" << mono;
            }
        } else {
            out << "(" << value.to_compact_string() << ")";
            if (mono != "1") out << "*" << mono;
        }
    }
    if (!truncation_norm_.is_zero()) {
        if (!first) out << " + ";
        out << "O(rho-norm <= " << truncation_norm_.str(prime_) << ")";
    }
    return out.str();
}

namespace {

struct PolyParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    BigInt parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("expected an integer in polynomial at offset " +
                                           std::to_string(pos));
        return BigInt(text.substr(start, pos - start));
    }

    BigRational parse_coefficient() {
        BigInt num = parse_integer();
        if (eat('/')) {
            BigInt den = parse_integer();
            if (den == 0) throw ZeroDenominator();
            return BigRational(num, den);
        }
        return BigRational(num);
    }

    // xK or xK^E
    std::pair<std::size_t, std::uint32_t> parse_factor(std::size_t variables) {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x')
            throw ParseError("expected a variable in polynomial at offset " + std::to_string(pos));
        ++pos;
        const BigInt idx = parse_integer();
        if (idx < 1 || idx > BigInt(variables))
            throw ParseError("variable index out of range in polynomial");
        std::uint32_t exp = 1;
        if (eat('^')) exp = static_cast<std::uint32_t>(parse_integer());
        return {static_cast<std::size_t>(idx) - 1, exp};
    }
};

}  // namespace

AnalyticFunction parse_polynomial(const std::string& text, const Prime& p, std::size_t variables,
                                  const BigRational& rho_exponent, std::int64_t truncation_degree,
                                  std::int64_t precision) {
    AnalyticFunction out(p, variables, rho_exponent, truncation_degree);
    PolyParser in{text};
    in.skip_ws();
    if (in.pos == text.size()) throw ParseError("empty polynomial literal");

    bool negative = in.eat('-');
    for (;;) {
        BigRational coef = negative ? BigRational(-1) : BigRational(1);
        bool saw_number = false;
        if (in.peek_digit()) {
            const BigRational q = in.parse_coefficient();
            coef *= q;
            saw_number = true;
        }
        std::vector<std::uint32_t> exps(variables, 0);
        bool saw_var = false;
        if (!saw_number && !in.peek('x'))
            throw ParseError("expected a term in polynomial at offset " + std::to_string(in.pos));
        while (true) {
            if (saw_number || saw_var) {
                if (!in.eat('*')) break;
            }
            auto [var, exp] = in.parse_factor(variables);
            exps[var] += exp;
            saw_var = true;
            saw_number = false;
        }
        MultiIndex index{std::move(exps)};
        if (index.total() > truncation_degree)
            throw ParseError("monomial degree exceeds the truncation degree " +
                             std::to_string(truncation_degree));
        out = out + AnalyticFunction::monomial(PadicNumber::from_rational(coef, p, precision),
                                               index, rho_exponent, truncation_degree);
        in.skip_ws();
        if (in.pos == text.size()) break;
        if (in.eat('+'))
            negative = false;
        else if (in.eat('-'))
            negative = true;
        else
            throw ParseError("unexpected character in polynomial at offset " +
                             std::to_string(in.pos));
    }
    return out;
}

}  // namespace padic
