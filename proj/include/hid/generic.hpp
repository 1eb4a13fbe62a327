#pragma once

// Building blocks written once over any exact scalar: Rational for plain
// evaluation, Jet for derivative and limit extraction.

#include <concepts>
#include <string_view>

#include "hid/outcome.hpp"
#include "hid/rational.hpp"

namespace hid {

inline Rational constant_like(const Rational& /*shape*/, const Rational& value) { return value; }

/// num / den, raising PoleError naming `factor` when den vanishes.
inline Rational quotient(const Rational& num, const Rational& den, std::string_view factor, long index = -1) {
    if (den.is_zero())
        throw PoleError(Pole{std::string(factor), index});
    return num / den;
}

template <class T>
concept ExactScalar = requires(const T& a, const T& b, const Rational& r) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a + r } -> std::convertible_to<T>;
    { a - r } -> std::convertible_to<T>;
    { a * r } -> std::convertible_to<T>;
    { r - a } -> std::convertible_to<T>;
    { constant_like(a, r) } -> std::same_as<T>;
    { quotient(a, b, std::string_view{}, 0L) } -> std::same_as<T>;
};

/// Non-negative integer power by repeated squaring.
template <ExactScalar T>
T ipow(const T& base, int exponent) {
    T result = constant_like(base, 1);
    T square = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1u)
            result = result * square;
        if (e > 1)
            square = square * square;
    }
    return result;
}

/// (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.
template <ExactScalar T>
T rising_factorial(const T& x, long n) {
    T result = constant_like(x, 1);
    for (long j = 0; j < n; ++j)
        result = result * (x + Rational(j));
    return result;
}

/// C(x, n) = (x-n+1)_n / n! for any scalar x and integer n >= 0.
template <ExactScalar T>
T binomial(const T& x, long n) {
    return rising_factorial(x - Rational(n - 1), n) * (Rational(1) / factorial(n));
}

/// H_n^<ell>(shift) = sum_{k=1}^n (shift+k)^-ell.
template <ExactScalar T>
T harmonic_sum(const T& shift, long n, int ell) {
    T sum = constant_like(shift, 0);
    const T one = constant_like(shift, 1);
    for (long k = 1; k <= n; ++k)
        sum = sum + quotient(one, ipow(shift + Rational(k), ell), "harmonic term shift+k", k);
    return sum;
}

} // namespace hid
