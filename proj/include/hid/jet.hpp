#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hid/generic.hpp"
#include "hid/outcome.hpp"
#include "hid/rational.hpp"

namespace hid {

/// Truncated Taylor expansion c_0 + c_1 t + ... + c_order t^order with exact
/// coefficients.
///
/// Binary operations between jets of different order truncate to the smaller
/// order. Division cancels a common leading run of zero coefficients before
/// dividing, which is how 0/0 limits are resolved; each cancelled coefficient
/// costs one order of the result.
class Jet {
public:
    /// Throws std::invalid_argument on an empty coefficient list.
    explicit Jet(std::vector<Rational> coefficients);

    static Jet constant(const Rational& value, int order);
    static Jet variable(const Rational& value, int order);

    [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    [[nodiscard]] const Rational& value() const { return coeffs_.front(); }

    /// k-th derivative at the expansion point, i.e. k! * c_k.
    [[nodiscard]] Rational derivative(int k) const;

    /// Count of leading zero coefficients (order+1 when identically zero).
    [[nodiscard]] int leading_zeros() const;

    [[nodiscard]] Jet truncated(int order) const;

    Jet operator-() const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    /// Throws PoleError when the division does not resolve.
    friend Jet operator/(const Jet& a, const Jet& b);

    friend Jet operator+(const Jet& a, const Rational& r);
    friend Jet operator-(const Jet& a, const Rational& r);
    friend Jet operator*(const Jet& a, const Rational& r);
    friend Jet operator+(const Rational& r, const Jet& a) { return a + r; }
    friend Jet operator-(const Rational& r, const Jet& a) { return -a + r; }
    friend Jet operator*(const Rational& r, const Jet& a) { return a * r; }

    friend bool operator==(const Jet&, const Jet&) = default;

private:
    std::vector<Rational> coeffs_;
};

enum class JetOp { Add, Sub, Mul, Div, IntPow };

/// Division with leading-zero cancellation. Poles when the divisor has no
/// nonzero retained coefficient or the dividend's zero prefix is shorter.
Outcome<Jet> divide(const Jet& num, const Jet& den);

/// Integer power; negative exponents go through `divide`.
Outcome<Jet> pow(const Jet& base, int exponent);

/// Dispatch over the five arithmetic operations. For IntPow the exponent is
/// the constant coefficient of `rhs`, which must be an integer.
Outcome<Jet> jet_arith(const Jet& lhs, const Jet& rhs, JetOp op);

Jet jet_lift(const Rational& value, int order, bool is_variable);

inline Jet constant_like(const Jet& shape, const Rational& value) { return Jet::constant(value, shape.order()); }
Jet quotient(const Jet& num, const Jet& den, std::string_view factor, long index = -1);

/// Expansion of x -> H_n^<ell>(x) about x0.
Outcome<Jet> jet_harmonic(const Rational& shift0, long n, int ell, int order);

/// Expansion of x -> C(x + r, s) about x0.
Jet jet_gen_binomial(const Rational& x0, long r, long s, int order);

/// One factor (a x + b) / (c x + d) of a linear-fractional product.
struct LinearFractional {
    Rational a, b, c, d;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct Lemma1Check {
    CheckStatus status = CheckStatus::Skipped;
    Rational derivative;  ///< coefficient 1 of the product jet
    Rational closed_form; ///< product times sum (a d - b c)/((a x + b)(c x + d))
    std::string reason;   ///< why a sample was skipped
};

/// Differentiates prod (a_j x + b_j)/(c_j x + d_j) at x0 with an order-1 jet
/// and compares against the logarithmic-derivative closed form.
Lemma1Check check_lemma1(std::span<const LinearFractional> factors, const Rational& x0);

using JetExpression = std::function<Jet(const Jet& z)>;

struct LimitValues {
    Rational lhs;
    Rational rhs;
};

/// Evaluates both expressions on z = z0 + t at the given order and returns
/// their constant coefficients after any prefix-cancelling divisions.
Outcome<LimitValues> limit_via_jet(const JetExpression& lhs, const JetExpression& rhs, const Rational& z0,
                                   int expansion_order);

} // namespace hid
