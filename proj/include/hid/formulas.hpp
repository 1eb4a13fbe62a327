#pragma once

// Both sides of every summation identity in the catalogue, over a generic
// exact scalar T (Rational or Jet). Each function throws PoleError when a
// denominator factor vanishes.
//
// Families are indexed by the weight C(y,t)/C(y+k,t) with t in {1, 2} and,
// for the second family, the harmonic order ell in {1, 2, 3, 4}.

#include "hid/rational.hpp"

namespace hid::formulas {

// Closed form of the contiguous balanced sum 3F2(a, b, -n; 1+c, 1+a+b-c-n).
template <class T> T contiguous_rhs(const T& a, const T& b, const T& c, long n);

// First family after a -> 1+z, b -> y (t=1) or b -> y-1 (t=2), c -> x:
//   sum (-1)^k C(n,k) C(z+k,k) C(y+k,k) / (C(x+k,k) C(y+z-x-n+k,k)) * C(y,t)/C(y+k,t).
template <class T> T first_substituted_lhs(const T& x, const T& y, const T& z, long n, int t);
template <class T> T first_substituted_rhs(const T& x, const T& y, const T& z, long n, int t);

// The x-derivative of the substituted form divided by 2x-y-z+n: the inner
// factor is sum_{i<=k} 1/((x+i)(y+z-x-n+i)), singular at z = 2x-y+n.
template <class T> T first_prelimit_lhs(const T& x, const T& y, const T& z, long n, int t);
template <class T> T first_prelimit_rhs(const T& x, const T& y, const T& z, long n, int t);

// (H_n(x-y) + H_n(x-z-1)) / (2x-y-z+n) and (H_n(x) + H_n(x-y-z-1)) / (2x-y-z+n).
template <class T> T limit_a_fragment(const T& x, const T& y, const T& z, long n);
template <class T> T limit_b_fragment(const T& x, const T& y, const T& z, long n);

// Second family after a -> 1+x, b -> y or y-1, c -> 1+z or z:
//   sum (-1)^k C(n,k) C(x+k,k) C(y+k,k) / (C(z+k,k) C(x+y-z-n+k,k)) * C(y,t)/C(y+k,t).
template <class T> T second_substituted_lhs(const T& x, const T& y, const T& z, long n, int t);
template <class T> T second_substituted_rhs(const T& x, const T& y, const T& z, long n, int t);

// Inner factor sum_{i<=k} 1/((x+i)(x+y-z-n+i)); tends to the theorem form as z -> y-n.
template <class T> T second_prelimit_lhs(const T& x, const T& y, const T& z, long n, int t);
template <class T> T second_prelimit_rhs(const T& x, const T& y, const T& z, long n, int t);

// sum (-1)^k C(n,k) C(2x-y+n+k,k) C(y+k,k)/C(x+k,k)^2 * C(y,t)/C(y+k,t) * H_k^<2>(x)
template <class T> T first_family_lhs(const T& x, const T& y, long n, int t);
template <class T> T first_family_rhs(const T& x, const T& y, long n, int t);

// sum (-1)^k C(n,k) C(y+k,k)/C(y-n+k,k) * C(y,t)/C(y+k,t) * H_k^<ell>(x)
template <class T> T second_family_lhs(const T& x, const T& y, long n, int t, int ell);
template <class T> T second_family_rhs(const T& x, const T& y, long n, int t, int ell);

// Integer specialisations x = p, y = q with classical H_{p+k}^<ell> in the sum.
Rational first_integer_lhs(long p, long q, long n, int t);
Rational first_integer_rhs(long p, long q, long n, int t);
Rational second_integer_lhs(long p, long q, long n, int t, int ell);
Rational second_integer_rhs(long p, long q, long n, int t, int ell);

/// Sum of the first-family weights at integer (p, q): the Saalschütz-type sum
/// that H_p^<ell> multiplies when H_{p+k} is split as H_k(p) + H_p.
Rational first_integer_weight_sum(long p, long q, long n, int t);
Rational second_integer_weight_sum(long p, long q, long n, int t);

} // namespace hid::formulas
