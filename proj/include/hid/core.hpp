#pragma once

#include <span>

#include "hid/outcome.hpp"
#include "hid/rational.hpp"

namespace hid {

/// Index data for a generalized harmonic number H_n^<ell>(shift).
struct HarmonicOrder {
    int ell = 1;
    long n = 0;
    Rational shift;
};

/// (x)_n; the empty product (x)_0 is 1.
Rational shifted_factorial(const Rational& x, long n);

/// C(x, n) = (x-n+1)_n / n!.
Rational gen_binomial(const Rational& x, long n);

/// H_n^<ell>(x) = sum_{k=1}^n 1/(x+k)^ell, or a pole naming the k with x+k = 0.
/// Throws std::invalid_argument if ell < 1 or n < 0.
EvalOutcome harmonic(const HarmonicOrder& h);

/// Terminating series at unit argument with -n as an implicit upper parameter:
///
///   sum_{k=0}^n (-n)_k prod(upper)_k / ((1)_k prod(lower)_k).
///
/// The sum stops early once a numerator factor vanishes; a lower factor that
/// vanishes before that is reported as a pole.
EvalOutcome hypergeom_terminating(std::span<const Rational> upper, std::span<const Rational> lower, long n);

/// Closed form (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n) of the balanced 3F2.
EvalOutcome saalschutz_rhs(const Rational& a, const Rational& b, const Rational& c, long n);

} // namespace hid
