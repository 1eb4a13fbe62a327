#include "doctest.h"

#include <array>
#include <string>

#include "hid/core.hpp"
#include "hid/formulas.hpp"

namespace fm = hid::formulas;
using hid::Rational;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

struct Frozen {
    int theorem;
    const char* x;
    const char* y;
    long n;
    const char* value;
};

// Values from tests/oracles/brute_force.py, computed with Python fractions.
constexpr std::array<Frozen, 18> frozen{{
    {1, "1/2", "3/5", 4, "-1630454159552/15826904296875"},
    {1, "5/2", "-1/3", 5, "92381954622030615712/1786098200643382851225"},
    {2, "1/2", "3/5", 4, "96840890471552/142442138671875"},
    {2, "-7/3", "2/7", 3, "-131625/134456"},
    {3, "1/2", "3/5", 4, "-374588/231525"},
    {3, "-7/3", "2/7", 3, "-1557/80"},
    {4, "5/2", "-1/3", 5, "-347086/585585"},
    {4, "-7/3", "2/7", 3, "33/20"},
    {5, "1/2", "3/5", 4, "-46180088/72930375"},
    {5, "-7/3", "2/7", 3, "10503/320"},
    {6, "5/2", "-1/3", 5, "-478611235497755216/53521677562035808125"},
    {6, "-7/3", "2/7", 3, "-171477/1280"},
    {7, "1/2", "3/5", 4, "-893632/2083725"},
    {7, "-7/3", "2/7", 3, "27/8"},
    {8, "5/2", "-1/3", 5, "-4072/45045"},
    {9, "1/2", "3/5", 4, "-198107632/656373375"},
    {9, "-7/3", "2/7", 3, "-243/64"},
    {10, "5/2", "-1/3", 5, "-20547243889021952/4117052120156600625"},
}};

constexpr std::array<std::pair<int, int>, 8> second_shape{{
    {1, 2}, {1, 1}, {1, 3}, {1, 4}, {2, 2}, {2, 1}, {2, 3}, {2, 4},
}};

} // namespace

TEST_CASE("theorem sides match oracle values") {
    for (const auto& f : frozen) {
        CAPTURE(f.theorem);
        const Rational x = q(f.x), y = q(f.y), v = q(f.value);
        if (f.theorem <= 2) {
            CHECK(fm::first_family_lhs(x, y, f.n, f.theorem) == v);
            CHECK(fm::first_family_rhs(x, y, f.n, f.theorem) == v);
        } else {
            const auto [t, ell] = second_shape[static_cast<std::size_t>(f.theorem - 3)];
            CHECK(fm::second_family_lhs(x, y, f.n, t, ell) == v);
            CHECK(fm::second_family_rhs(x, y, f.n, t, ell) == v);
        }
    }
}

TEST_CASE("spot values") {
    CHECK(fm::first_family_lhs(Rational(1), Rational(1, 2), 1, 1) == Rational(-7, 64));
    CHECK(fm::first_family_rhs(Rational(1), Rational(1, 2), 1, 1) == Rational(-7, 64));
    CHECK(fm::second_family_lhs(Rational(2), Rational(1), 1, 1, 2) == Rational(-1, 9));
    CHECK(fm::second_family_rhs(Rational(2), Rational(1), 1, 1, 2) == Rational(-1, 9));
    CHECK(fm::second_family_lhs(Rational(2), Rational(1), 1, 1, 1) == Rational(-1, 3));
    CHECK(fm::second_family_rhs(Rational(2), Rational(1), 1, 1, 1) == Rational(-1, 3));
    CHECK(fm::first_family_lhs(Rational(5, 2), Rational(0), 3, 1) == 0);
    CHECK(fm::first_family_rhs(Rational(5, 2), Rational(0), 3, 1) == 0);
}

TEST_CASE("substituted and pre-limit forms match oracle values") {
    const Rational x(1, 3), y(2, 5), z(-1, 2);
    CHECK(fm::first_substituted_lhs(x, y, z, 3, 1) == q("59653/40807"));
    CHECK(fm::first_substituted_rhs(x, y, z, 3, 1) == q("59653/40807"));
    CHECK(fm::second_substituted_lhs(x, y, z, 3, 1) == q("-77/851"));
    CHECK(fm::second_substituted_rhs(x, y, z, 3, 1) == q("-77/851"));
    CHECK(fm::first_prelimit_lhs(x, y, z, 3, 1) == q("-3921822927/11656478743"));
    CHECK(fm::first_prelimit_rhs(x, y, z, 3, 1) == q("-3921822927/11656478743"));
    CHECK(fm::second_prelimit_lhs(x, y, z, 3, 1) == q("-2063952/5069407"));
    CHECK(fm::second_prelimit_rhs(x, y, z, 3, 1) == q("-2063952/5069407"));
}

TEST_CASE("the other normalisation of the second pre-limit form does not hold") {
    // With C(z-y+n, n) in place of C(z-y-1+n, n) the right side is off.
    const Rational x(1, 3), y(2, 5), z(-1, 2);
    const long n = 3;
    const Rational alt = fm::second_prelimit_rhs(x, y, z, n, 1) * hid::gen_binomial(z - y + Rational(n), n) /
                         hid::gen_binomial(z - y - Rational(1) + Rational(n), n);
    CHECK(alt == q("687984/724201"));
    CHECK(alt != fm::second_prelimit_lhs(x, y, z, n, 1));
}

TEST_CASE("contiguous closed form against the series") {
    const Rational a(2, 3), b(-5, 7), c(3, 2);
    for (long n = 0; n <= 6; ++n) {
        const std::array upper{a, b};
        const std::array lower{Rational(1) + c, Rational(1) + a + b - c - Rational(n)};
        CHECK(hid::hypergeom_terminating(upper, lower, n).value() == fm::contiguous_rhs(a, b, c, n));
    }
}

TEST_CASE("integer corollary forms") {
    // C1 at p=3, q=2, n=2 and the weight-sum identity used by the consistency check.
    CHECK(fm::first_integer_lhs(3, 2, 2, 1) == fm::first_integer_rhs(3, 2, 2, 1));
    CHECK(fm::first_integer_weight_sum(3, 2, 2, 1) ==
          fm::first_substituted_rhs(Rational(3), Rational(2), Rational(6), 2, 1));
    for (int ell = 1; ell <= 4; ++ell) {
        CHECK(fm::second_integer_lhs(4, 3, 2, 1, ell) == fm::second_integer_rhs(4, 3, 2, 1, ell));
        CHECK(fm::second_integer_lhs(4, 3, 2, 2, ell) == fm::second_integer_rhs(4, 3, 2, 2, ell));
    }
    CHECK(fm::second_integer_weight_sum(4, 3, 2, 1) == 0);
}

TEST_CASE("poles are raised, not silently divided") {
    // C(x+n, n) vanishes at x = -1, n = 1.
    CHECK_THROWS_AS(fm::second_family_rhs(Rational(-1), Rational(1), 1, 1, 2), hid::PoleError);
}
