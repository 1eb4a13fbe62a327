#include "hid/jet.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hid {

Jet::Jet(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty())
        throw std::invalid_argument("jet needs at least one coefficient");
}

Jet Jet::constant(const Rational& value, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = value;
    return Jet(std::move(c));
}

Jet Jet::variable(const Rational& value, int order) {
    Jet j = constant(value, order);
    if (order >= 1)
        j.coeffs_[1] = Rational(1);
    return j;
}

Rational Jet::derivative(int k) const { return coeffs_.at(static_cast<std::size_t>(k)) * factorial(k); }

int Jet::leading_zeros() const {
    const auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
    return static_cast<int>(it - coeffs_.begin());
}

Jet Jet::truncated(int order) const {
    return Jet(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1));
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Jet operator+(const Jet& a, const Jet& b) {
    Jet r = a.truncated(b.order());
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] += b.coeffs_[i];
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    Jet r = a.truncated(b.order());
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] -= b.coeffs_[i];
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (int j = 0; i + j <= order; ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Jet(std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) { return divide(a, b).value(); }

Jet operator+(const Jet& a, const Rational& r) {
    Jet j = a;
    j.coeffs_[0] += r;
    return j;
}

Jet operator-(const Jet& a, const Rational& r) {
    Jet j = a;
    j.coeffs_[0] -= r;
    return j;
}

Jet operator*(const Jet& a, const Rational& r) {
    Jet j = a;
    for (auto& c : j.coeffs_)
        c *= r;
    return j;
}

Outcome<Jet> divide(const Jet& num, const Jet& den) {
    const int order = std::min(num.order(), den.order());
    const auto n = num.coefficients().first(static_cast<std::size_t>(order) + 1);
    const auto d = den.coefficients().first(static_cast<std::size_t>(order) + 1);

    int shift = 0;
    while (shift <= order && d[shift].is_zero())
        ++shift;
    if (shift > order)
        return Pole{"jet divisor vanishes at every retained order", order};
    for (int i = 0; i < shift; ++i)
        if (!n[i].is_zero())
            return Pole{"jet dividend prefix does not cancel divisor zero of order " + std::to_string(shift), i};

    // Series long division on the shifted coefficients.
    const int out_order = order - shift;
    std::vector<Rational> q(static_cast<std::size_t>(out_order) + 1);
    const Rational& lead = d[shift];
    for (int k = 0; k <= out_order; ++k) {
        Rational acc = n[k + shift];
        for (int j = 1; j <= k; ++j)
            acc -= d[j + shift] * q[k - j];
        q[k] = acc / lead;
    }
    return Jet(std::move(q));
}

Outcome<Jet> pow(const Jet& base, int exponent) {
    if (exponent >= 0)
        return ipow(base, exponent);
    return divide(Jet::constant(1, base.order()), ipow(base, -exponent));
}

Outcome<Jet> jet_arith(const Jet& lhs, const Jet& rhs, JetOp op) {
    switch (op) {
    case JetOp::Add:
        return lhs + rhs;
    case JetOp::Sub:
        return lhs - rhs;
    case JetOp::Mul:
        return lhs * rhs;
    case JetOp::Div:
        return divide(lhs, rhs);
    case JetOp::IntPow: {
        const auto e = rhs.value().to_long();
        if (!e || *e > 1'000'000 || *e < -1'000'000)
            throw std::invalid_argument("jet power exponent must be a small integer");
        return pow(lhs, static_cast<int>(*e));
    }
    }
    throw std::invalid_argument("unknown jet operation");
}

Jet jet_lift(const Rational& value, int order, bool is_variable) {
    if (order < 0)
        throw std::invalid_argument("jet order must be non-negative");
    return is_variable ? Jet::variable(value, order) : Jet::constant(value, order);
}

Jet quotient(const Jet& num, const Jet& den, std::string_view factor, long index) {
    auto q = divide(num, den);
    if (q.is_pole())
        throw PoleError(Pole{std::string(factor) + " (" + q.pole().factor + ")", index});
    return q.value();
}

Outcome<Jet> jet_harmonic(const Rational& shift0, long n, int ell, int order) {
    if (ell < 1 || n < 0)
        throw std::invalid_argument("harmonic jet needs ell >= 1 and n >= 0");
    return capture_pole([&] { return harmonic_sum(Jet::variable(shift0, order), n, ell); });
}

Jet jet_gen_binomial(const Rational& x0, long r, long s, int order) {
    return binomial(Jet::variable(x0, order) + Rational(r), s);
}

Lemma1Check check_lemma1(std::span<const LinearFractional> factors, const Rational& x0) {
    Lemma1Check out;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const auto& f = factors[j];
        if ((f.a * x0 + f.b).is_zero() || (f.c * x0 + f.d).is_zero()) {
            out.reason = "factor " + std::to_string(j + 1) + " vanishes at x0";
            return out;
        }
    }

    const Jet x = Jet::variable(x0, 1);
    Jet product = Jet::constant(1, 1);
    Rational value(1);
    Rational log_derivative(0);
    for (const auto& f : factors) {
        const Rational num = f.a * x0 + f.b;
        const Rational den = f.c * x0 + f.d;
        product = product * quotient(x * f.a + f.b, x * f.c + f.d, "linear-fractional factor");
        value *= num / den;
        log_derivative += (f.a * f.d - f.b * f.c) / (num * den);
    }
    out.derivative = product[1];
    out.closed_form = value * log_derivative;
    out.status = out.derivative == out.closed_form ? CheckStatus::Pass : CheckStatus::Fail;
    return out;
}

Outcome<LimitValues> limit_via_jet(const JetExpression& lhs, const JetExpression& rhs, const Rational& z0,
                                   int expansion_order) {
    if (expansion_order < 1)
        throw std::invalid_argument("limit expansion order must be positive");
    const Jet z = Jet::variable(z0, expansion_order);
    return capture_pole([&] { return LimitValues{lhs(z).value(), rhs(z).value()}; });
}

} // namespace hid
