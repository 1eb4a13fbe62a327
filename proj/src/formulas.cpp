#include "hid/formulas.hpp"

#include <stdexcept>

#include "hid/generic.hpp"
#include "hid/jet.hpp"

namespace hid::formulas {

namespace {

template <class T>
T cst(const T& shape, const Rational& v) {
    return constant_like(shape, v);
}

Rational signed_choose(long n, long k) {
    const Rational c = binomial(Rational(n), k);
    return (k % 2 == 0) ? c : -c;
}

// C(y,t)/C(y+k,t) in the cancelled form (y-t+1)_k / (y+1)_k; identically 1 at k = 0.
template <class T>
T weight_ratio(const T& y, long k, int t) {
    if (t != 1 && t != 2)
        throw std::invalid_argument("weight order t must be 1 or 2");
    return quotient(rising_factorial(y - Rational(t - 1), k), rising_factorial(y + Rational(1), k), "(y+1)_k", k);
}

template <class T>
T harmonic_diff(const T& x, const T& y, long n, int ell) {
    return harmonic_sum(x, n, ell) - harmonic_sum(x - y, n, ell);
}

Rational classical_harmonic(long m, int ell) {
    if (m < 0)
        throw std::invalid_argument("classical harmonic number needs a non-negative index");
    return harmonic_sum(Rational(0), m, ell);
}

// sum_{k=0}^n w_k * inner_k, where the caller supplies both pieces per k.
template <class T, class Weight, class Inner>
T weighted_sum(const T& shape, long n, Weight&& weight, Inner&& inner) {
    T sum = cst(shape, 0);
    for (long k = 0; k <= n; ++k)
        sum = sum + weight(k) * inner(k);
    return sum;
}

template <class T>
T first_substituted_weight(const T& x, const T& y, const T& z, long n, long k, int t) {
    const T num = binomial(z + Rational(k), k) * binomial(y + Rational(k), k);
    const T den = binomial(x + Rational(k), k) * binomial(y + z - x + Rational(k - n), k);
    return quotient(num, den, "C(x+k,k) C(y+z-x-n+k,k)", k) * weight_ratio(y, k, t) * signed_choose(n, k);
}

template <class T>
T second_substituted_weight(const T& x, const T& y, const T& z, long n, long k, int t) {
    const T num = binomial(x + Rational(k), k) * binomial(y + Rational(k), k);
    const T den = binomial(z + Rational(k), k) * binomial(x + y - z + Rational(k - n), k);
    return quotient(num, den, "C(z+k,k) C(x+y-z-n+k,k)", k) * weight_ratio(y, k, t) * signed_choose(n, k);
}

// Partial sums sum_{i<=k} 1/((u+i)(v+i)), cached as k increases.
template <class T>
class InnerSum {
public:
    InnerSum(T u, T v) : u_(std::move(u)), v_(std::move(v)), sum_(cst(u_, 0)) {}
    const T& at(long k) {
        for (; i_ < k; ++i_) {
            const Rational step(i_ + 1);
            sum_ = sum_ + quotient(cst(u_, 1), (u_ + step) * (v_ + step), "(u+i)(v+i)", i_ + 1);
        }
        return sum_;
    }

private:
    T u_, v_, sum_;
    long i_ = 0;
};

// Running H_k^<ell>(x) for k = 0, 1, ...
template <class T>
class RunningHarmonic {
public:
    RunningHarmonic(T x, int ell) : x_(std::move(x)), ell_(ell), sum_(cst(x_, 0)) {}
    const T& at(long k) {
        for (; k_ < k; ++k_)
            sum_ = sum_ + quotient(cst(x_, 1), ipow(x_ + Rational(k_ + 1), ell_), "x+k", k_ + 1);
        return sum_;
    }

private:
    T x_;
    int ell_;
    T sum_;
    long k_ = 0;
};

// C(x-y+n,n) C(x-z-1+n,n) / (C(x+n,n) C(x-y-z-1+n,n))
template <class T>
T first_prefactor(const T& x, const T& y, const T& z, long n) {
    const Rational nn(n);
    return quotient(binomial(x - y + nn, n) * binomial(x - z + Rational(n - 1), n),
                    binomial(x + nn, n) * binomial(x - y - z + Rational(n - 1), n), "C(x+n,n) C(x-y-z-1+n,n)");
}

// ((x-y+1)(x-z-1) + n(x-y-z)) / ((x-y+1)(x-z-1+n))
template <class T>
T first_contiguous_factor(const T& x, const T& y, const T& z, long n) {
    const Rational nn(n);
    const T xy1 = x - y + Rational(1);
    return quotient(xy1 * (x - z - Rational(1)) + (x - y - z) * nn, xy1 * (x - z + Rational(n - 1)),
                    "(x-y+1)(x-z-1+n)");
}

// C(z-x-1+n,n) C(z-y+shift+n,n) / (C(z-x-y-1+n,n) C(z+n,n)), shift in {0, -1}
template <class T>
T second_prefactor(const T& x, const T& y, const T& z, long n, long shift) {
    const Rational nn(n);
    return quotient(binomial(z - x + Rational(n - 1), n) * binomial(z - y + Rational(n + shift), n),
                    binomial(z - x - y + Rational(n - 1), n) * binomial(z + nn, n), "C(z-x-y-1+n,n) C(z+n,n)");
}

// (z-x-1)(z-y+1) + n(z-x-y)
template <class T>
T second_contiguous_numerator(const T& x, const T& y, const T& z, long n) {
    return (z - x - Rational(1)) * (z - y + Rational(1)) + (z - x - y) * Rational(n);
}

} // namespace

template <class T>
T contiguous_rhs(const T& a, const T& b, const T& c, long n) {
    const T cab = c - a - b;
    const T factor =
        cst(a, 1) + quotient(cab * Rational(n), (c - a) * (c - b), "(c-a)(c-b)");
    return factor * quotient(rising_factorial(c - a, n) * rising_factorial(c - b, n),
                             rising_factorial(c + Rational(1), n) * rising_factorial(cab, n),
                             "(1+c)_n (c-a-b)_n");
}

template <class T>
T first_substituted_lhs(const T& x, const T& y, const T& z, long n, int t) {
    return weighted_sum(
        x, n, [&](long k) { return first_substituted_weight(x, y, z, n, k, t); }, [&](long) { return cst(x, 1); });
}

template <class T>
T first_substituted_rhs(const T& x, const T& y, const T& z, long n, int t) {
    const T pre = first_prefactor(x, y, z, n);
    return t == 1 ? pre : first_contiguous_factor(x, y, z, n) * pre;
}

template <class T>
T first_prelimit_lhs(const T& x, const T& y, const T& z, long n, int t) {
    InnerSum<T> inner(x, y + z - x - Rational(n));
    return weighted_sum(
        x, n, [&](long k) { return first_substituted_weight(x, y, z, n, k, t); },
        [&](long k) { return inner.at(k); });
}

template <class T>
T limit_a_fragment(const T& x, const T& y, const T& z, long n) {
    const T one = cst(x, 1);
    return quotient(harmonic_sum(x - y, n, 1) + harmonic_sum(x - z - one, n, 1), x * Rational(2) - y - z + Rational(n),
                    "2x-y-z+n");
}

template <class T>
T limit_b_fragment(const T& x, const T& y, const T& z, long n) {
    const T one = cst(x, 1);
    return quotient(harmonic_sum(x, n, 1) + harmonic_sum(x - y - z - one, n, 1), x * Rational(2) - y - z + Rational(n),
                    "2x-y-z+n");
}

template <class T>
T first_prelimit_rhs(const T& x, const T& y, const T& z, long n, int t) {
    const T pre = first_prefactor(x, y, z, n);
    const T fragments = limit_a_fragment(x, y, z, n) - limit_b_fragment(x, y, z, n);
    if (t == 1)
        return pre * fragments;
    const T xy1 = x - y + Rational(1);
    const T xzn = x - z + Rational(n - 1);
    const T tail = quotient((z + Rational(1)) * Rational(n), xy1 * xy1 * xzn * xzn, "(x-y+1)^2 (x-z-1+n)^2");
    return first_contiguous_factor(x, y, z, n) * pre * fragments + tail * pre;
}

template <class T>
T second_substituted_lhs(const T& x, const T& y, const T& z, long n, int t) {
    return weighted_sum(
        x, n, [&](long k) { return second_substituted_weight(x, y, z, n, k, t); }, [&](long) { return cst(x, 1); });
}

template <class T>
T second_substituted_rhs(const T& x, const T& y, const T& z, long n, int t) {
    const T pre = second_prefactor(x, y, z, n, 0);
    if (t == 1)
        return pre;
    return quotient(second_contiguous_numerator(x, y, z, n),
                    (z - x + Rational(n - 1)) * (z - y + Rational(1)), "(z-x-1+n)(z-y+1)") *
           pre;
}

template <class T>
T second_prelimit_lhs(const T& x, const T& y, const T& z, long n, int t) {
    InnerSum<T> inner(x, x + y - z - Rational(n));
    return weighted_sum(
        x, n, [&](long k) { return second_substituted_weight(x, y, z, n, k, t); },
        [&](long k) { return inner.at(k); });
}

template <class T>
T second_prelimit_rhs(const T& x, const T& y, const T& z, long n, int t) {
    const T one = cst(x, 1);
    const T pre = second_prefactor(x, y, z, n, -1);
    const T dh = harmonic_sum(z - x - y - one, n, 1) - harmonic_sum(z - x - one, n, 1);
    const T yz = y - z;
    if (t == 1)
        return quotient(pre * dh, yz, "y-z");
    const T zxn = z - x + Rational(n - 1);
    const T zy1 = z - y + Rational(1);
    const T main = quotient(second_contiguous_numerator(x, y, z, n), zxn * zy1 * yz, "(z-x-1+n)(z-y+1)(y-z)");
    const T tail = quotient((z + Rational(n)) * Rational(n), zxn * zxn * zy1 * yz, "(z-x-1+n)^2 (z-y+1)(y-z)");
    return main * pre * dh - tail * pre;
}

template <class T>
T first_family_lhs(const T& x, const T& y, long n, int t) {
    RunningHarmonic<T> h(x, 2);
    const T two_x_y_n = x * Rational(2) - y + Rational(n);
    return weighted_sum(
        x, n,
        [&](long k) {
            const Rational kk(k);
            const T bx = binomial(x + kk, k);
            const T w = quotient(binomial(two_x_y_n + kk, k) * binomial(y + kk, k), bx * bx, "C(x+k,k)^2", k);
            return w * weight_ratio(y, k, t) * signed_choose(n, k);
        },
        [&](long k) { return h.at(k); });
}

template <class T>
T first_family_rhs(const T& x, const T& y, long n, int t) {
    const Rational nn(n);
    const T q = quotient(binomial(x - y + nn, n), binomial(x + nn, n), "C(x+n,n)");
    const T sq = q * q;
    const T e2 = harmonic_diff(x, y, n, 2);
    if (t == 1)
        return sq * e2;
    const T u = x - y + Rational(1);
    const T lin = (x * Rational(2) - y + Rational(1)) * nn + Rational(n * n);
    const T u2 = u * u;
    return quotient(lin + u2, u2, "(1+x-y)^2") * sq * e2 + quotient(lin, u2 * u2, "(1+x-y)^4") * sq;
}

template <class T>
T second_family_lhs(const T& x, const T& y, long n, int t, int ell) {
    RunningHarmonic<T> h(x, ell);
    return weighted_sum(
        x, n,
        [&](long k) {
            const Rational kk(k);
            const T w = quotient(binomial(y + kk, k), binomial(y - Rational(n) + kk, k), "C(y-n+k,k)", k);
            return w * weight_ratio(y, k, t) * signed_choose(n, k);
        },
        [&](long k) { return h.at(k); });
}

template <class T>
T second_family_rhs(const T& x, const T& y, long n, int t, int ell) {
    const Rational nn(n);
    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    const T bxy = binomial(x - y + nn, n);
    const T bx = binomial(x + nn, n);
    const T by = binomial(y, n);
    const T r = quotient(bxy, bx * by, "C(x+n,n) C(y,n)");

    // e_l = H_n^<l>(x) - H_n^<l>(x-y)
    const auto e = [&](int l) { return harmonic_diff(x, y, n, l); };

    if (t == 1) {
        switch (ell) {
        case 2:
            return quotient(r * (-e(1)), cst(x, nn), "n") * sign;
        case 1:
            return quotient(cst(x, 1) - quotient(bxy, bx, "C(x+n,n)"), by * nn, "n C(y,n)") * sign;
        case 3: {
            const T d1 = -e(1);
            return quotient(r * (-e(2) - d1 * d1), cst(x, nn * 2), "2n") * sign;
        }
        case 4: {
            const T d1 = -e(1);
            const T d2 = -e(2);
            const T d3 = -e(3);
            return quotient(r * (d1 * d1 * d1 + d3 * Rational(2) - d1 * d2 * Rational(3)), cst(x, nn * 6), "6n") *
                   sign;
        }
        default:
            break;
        }
    } else if (t == 2) {
        const Rational nn1 = nn * Rational(n - 1);
        const T u = x - y + Rational(1);
        const T v = u + y * nn;
        const T ny = y * nn;
        switch (ell) {
        case 2: {
            const T lead = quotient(v, u * nn1, "n(n-1)(1+x-y)") * r;
            return lead * (e(1) + quotient(ny, u * v, "(1+x-y)(1+x-y+ny)")) * sign;
        }
        case 1:
            return (quotient(v, u * nn1, "n(n-1)(1+x-y)") * r - quotient(cst(x, 1), by * nn1, "n(n-1) C(y,n)")) *
                   sign;
        case 3: {
            const T e1 = e(1);
            const T a_n = e(2) + quotient(ny * Rational(2), u * u * v, "(1+x-y)^2 (1+x-y+ny)");
            const T b_n = e1 * (e1 + quotient(ny * Rational(2), u * v, "(1+x-y)(1+x-y+ny)"));
            return quotient(v, u * nn1 * 2, "2n(n-1)(1+x-y)") * r * (a_n + b_n) * sign;
        }
        case 4: {
            const T e1 = e(1);
            const T e2 = e(2);
            const T e_n = e1 * e1 * e1 + e(3) * Rational(2) + e1 * e2 * Rational(3);
            const T f_n = e1 * e1 + e2;
            const T u2 = u * u;
            const T g_n = quotient(ny * Rational(6), u2, "(1+x-y)^2") * e1 +
                          quotient(ny * Rational(6), u2 * u, "(1+x-y)^3");
            const T brace = v * e_n + quotient(ny * Rational(3), u, "1+x-y") * f_n + g_n;
            return quotient(r * brace, u * nn1 * 6, "6n(n-1)(1+x-y)") * sign;
        }
        default:
            break;
        }
    }
    throw std::invalid_argument("second family closed form exists for t in {1,2} and ell in {1,2,3,4} only");
}

// ---------------------------------------------------------------------------
// Integer specialisations

namespace {

Rational first_integer_weight(long p, long q, long n, long k, int t) {
    const Rational bp = binomial(Rational(p + k), k);
    return quotient(binomial(Rational(2 * p - q + n + k), k) * binomial(Rational(q + k), k), bp * bp, "C(p+k,k)^2",
                    k) *
           weight_ratio(Rational(q), k, t) * signed_choose(n, k);
}

Rational second_integer_weight(long p, long q, long n, long k, int t) {
    (void)p;
    return quotient(binomial(Rational(q + k), k), binomial(Rational(q - n + k), k), "C(q-n+k,k)", k) *
           weight_ratio(Rational(q), k, t) * signed_choose(n, k);
}

// H_{p-q+n} - H_{p+n} - H_{p-q} + H_p at order ell.
Rational shifted_block(long p, long q, long n, int ell) {
    return classical_harmonic(p - q + n, ell) - classical_harmonic(p + n, ell) - classical_harmonic(p - q, ell) +
           classical_harmonic(p, ell);
}

} // namespace

Rational first_integer_lhs(long p, long q, long n, int t) {
    Rational sum(0);
    for (long k = 0; k <= n; ++k)
        sum += first_integer_weight(p, q, n, k, t) * classical_harmonic(p + k, 2);
    return sum;
}

Rational first_integer_rhs(long p, long q, long n, int t) {
    const Rational ratio = quotient(binomial(Rational(p - q + n), n), binomial(Rational(p + n), n), "C(p+n,n)");
    const Rational sq = ratio * ratio;
    const Rational brace = classical_harmonic(p - q, 2) + classical_harmonic(p + n, 2) - classical_harmonic(p - q + n, 2);
    if (t == 1)
        return sq * brace;
    const Rational u(1 + p - q);
    const Rational lin(n * n + n * (1 + 2 * p - q));
    return quotient(lin + u * u, u * u, "(1+p-q)^2") * sq * brace + quotient(lin, pow(u, 4), "(1+p-q)^4") * sq;
}

Rational first_integer_weight_sum(long p, long q, long n, int t) {
    Rational sum(0);
    for (long k = 0; k <= n; ++k)
        sum += first_integer_weight(p, q, n, k, t);
    return sum;
}

Rational second_integer_lhs(long p, long q, long n, int t, int ell) {
    Rational sum(0);
    for (long k = 0; k <= n; ++k)
        sum += second_integer_weight(p, q, n, k, t) * classical_harmonic(p + k, ell);
    return sum;
}

Rational second_integer_weight_sum(long p, long q, long n, int t) {
    Rational sum(0);
    for (long k = 0; k <= n; ++k)
        sum += second_integer_weight(p, q, n, k, t);
    return sum;
}

Rational second_integer_rhs(long p, long q, long n, int t, int ell) {
    const Rational nn(n);
    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    const Rational bpq = binomial(Rational(p - q + n), n);
    const Rational bp = binomial(Rational(p + n), n);
    const Rational bq = binomial(Rational(q), n);

    if (t == 1 && ell == 1)
        return sign * quotient(Rational(1) - quotient(bpq, bp, "C(p+n,n)"), nn * bq, "n C(q,n)");
    if (t == 2 && ell == 1) {
        const Rational nn1 = nn * Rational(n - 1);
        const Rational u(1 + p - q);
        const Rational v = u + Rational(n * q);
        return sign * (quotient(v * bpq, nn1 * u * bp * bq, "n(n-1)(1+p-q) C(p+n,n) C(q,n)") -
                       quotient(Rational(1), nn1 * bq, "n(n-1) C(q,n)"));
    }

    const Rational rc = quotient(bpq, bp * bq, "C(p+n,n) C(q,n)");
    // Delta_l = H_{p-q+n} - H_{p+n} - H_{p-q} + H_p; delta_l = -Delta_l.
    const auto big = [&](int l) { return shifted_block(p, q, n, l); };

    if (t == 1) {
        switch (ell) {
        case 2:
            return sign * quotient(rc * big(1), nn, "n");
        case 3:
            return sign * quotient(rc * (big(2) - big(1) * big(1)), nn * 2, "2n");
        case 4: {
            const Rational d1 = big(1);
            return sign * quotient(rc * (d1 * d1 * d1 + big(3) * 2 - d1 * big(2) * 3), nn * 6, "6n");
        }
        default:
            break;
        }
    } else if (t == 2) {
        const Rational nn1 = nn * Rational(n - 1);
        const Rational u(1 + p - q);
        const Rational v = u + Rational(n * q);
        const Rational nq(n * q);
        const Rational d1 = -big(1);
        const Rational d2 = -big(2);
        switch (ell) {
        case 2:
            return sign * quotient(v, nn1 * u, "n(n-1)(1+p-q)") * rc * (d1 + quotient(nq, u * v, "(1+p-q)(1+p-q+nq)"));
        case 3: {
            const Rational c_n = d2 + quotient(nq * 2, u * u * v, "(1+p-q)^2 (1+p-q+nq)");
            const Rational d_n = d1 * (d1 + quotient(nq * 2, u * v, "(1+p-q)(1+p-q+nq)"));
            return sign * quotient(v, nn1 * u * 2, "2n(n-1)(1+p-q)") * rc * (c_n + d_n);
        }
        case 4: {
            const Rational d3 = -big(3);
            const Rational u_n = d1 * d1 * d1 + d3 * 2 + d1 * d2 * 3;
            const Rational v_n = d1 * d1 + d2;
            const Rational w_n = quotient(nq * 6, u * u, "(1+p-q)^2") * d1 + quotient(nq * 6, pow(u, 3), "(1+p-q)^3");
            const Rational brace = v * u_n + quotient(nq * 3, u, "1+p-q") * v_n + w_n;
            return sign * quotient(rc * brace, nn1 * u * 6, "6n(n-1)(1+p-q)");
        }
        default:
            break;
        }
    }
    throw std::invalid_argument("second family closed form exists for t in {1,2} and ell in {1,2,3,4} only");
}

#define HID_INSTANTIATE(T)                                                                                 \
    template T contiguous_rhs<T>(const T&, const T&, const T&, long);                                      \
    template T first_substituted_lhs<T>(const T&, const T&, const T&, long, int);                          \
    template T first_substituted_rhs<T>(const T&, const T&, const T&, long, int);                          \
    template T first_prelimit_lhs<T>(const T&, const T&, const T&, long, int);                             \
    template T first_prelimit_rhs<T>(const T&, const T&, const T&, long, int);                             \
    template T limit_a_fragment<T>(const T&, const T&, const T&, long);                                    \
    template T limit_b_fragment<T>(const T&, const T&, const T&, long);                                    \
    template T second_substituted_lhs<T>(const T&, const T&, const T&, long, int);                         \
    template T second_substituted_rhs<T>(const T&, const T&, const T&, long, int);                         \
    template T second_prelimit_lhs<T>(const T&, const T&, const T&, long, int);                            \
    template T second_prelimit_rhs<T>(const T&, const T&, const T&, long, int);                            \
    template T first_family_lhs<T>(const T&, const T&, long, int);                                         \
    template T first_family_rhs<T>(const T&, const T&, long, int);                                         \
    template T second_family_lhs<T>(const T&, const T&, long, int, int);                                   \
    template T second_family_rhs<T>(const T&, const T&, long, int, int);

HID_INSTANTIATE(Rational)
HID_INSTANTIATE(Jet)

#undef HID_INSTANTIATE

} // namespace hid::formulas
