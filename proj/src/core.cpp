#include "hid/core.hpp"

#include <stdexcept>
#include <vector>

#include "hid/generic.hpp"

namespace hid {

std::string Pole::describe() const {
    if (index < 0)
        return factor;
    return factor + " at index " + std::to_string(index);
}

std::string to_text(const EvalOutcome& outcome) {
    if (outcome.has_value())
        return outcome.value().str();
    return "pole(" + outcome.pole().describe() + ")";
}

Rational shifted_factorial(const Rational& x, long n) { return rising_factorial(x, n); }

Rational gen_binomial(const Rational& x, long n) { return binomial(x, n); }

EvalOutcome harmonic(const HarmonicOrder& h) {
    if (h.ell < 1 || h.n < 0)
        throw std::invalid_argument("harmonic number needs ell >= 1 and n >= 0");
    return capture_pole([&] { return harmonic_sum(h.shift, h.n, h.ell); });
}

EvalOutcome hypergeom_terminating(std::span<const Rational> upper, std::span<const Rational> lower, long n) {
    if (n < 0)
        throw std::invalid_argument("termination index must be non-negative");
    Rational term(1);
    Rational sum(1);
    for (long k = 0; k < n; ++k) {
        // term_{k+1} / term_k = (k-n) prod(u+k) / ((k+1) prod(l+k))
        Rational num(k - n);
        for (const auto& u : upper)
            num *= u + Rational(k);
        if (num.is_zero())
            break;
        Rational den(k + 1);
        for (std::size_t j = 0; j < lower.size(); ++j) {
            const Rational factor = lower[j] + Rational(k);
            if (factor.is_zero())
                return Pole{"lower parameter " + std::to_string(j) + " + k", k + 1};
            den *= factor;
        }
        term *= num / den;
        sum += term;
    }
    return sum;
}

EvalOutcome saalschutz_rhs(const Rational& a, const Rational& b, const Rational& c, long n) {
    const Rational den_c = rising_factorial(c, n);
    if (den_c.is_zero())
        return Pole{"(c)_n", n};
    const Rational den_cab = rising_factorial(c - a - b, n);
    if (den_cab.is_zero())
        return Pole{"(c-a-b)_n", n};
    return rising_factorial(c - a, n) * rising_factorial(c - b, n) / (den_c * den_cab);
}

} // namespace hid
