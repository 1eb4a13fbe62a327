#include "hid/registry.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "hid/core.hpp"
#include "hid/formulas.hpp"
#include "hid/jet.hpp"

namespace hid {

namespace {

namespace fm = formulas;

constexpr long max_integer_param = 100'000;

const Rational& rat(const ParamMap& m, std::string_view key) { return m.find(key)->second; }
long integer(const ParamMap& m, std::string_view key) { return *m.find(key)->second.to_long(); }

template <class Fn>
SideEvaluator side(Fn fn) {
    return [fn = std::move(fn)](const ParamMap& m) -> EvalOutcome { return capture_pole([&] { return fn(m); }); };
}

ParamSpec rational_param(std::string name) { return {std::move(name), ParamKind::Rational, SampleRange::Rational}; }
ParamSpec upper_index(std::string name) { return {std::move(name), ParamKind::NonnegInt, SampleRange::UpperIndex}; }
ParamSpec grid_index(std::string name) { return {std::move(name), ParamKind::NonnegInt, SampleRange::GridIndex}; }

Constraint n_at_least(long lo) {
    return {"n ≥ " + std::to_string(lo), [lo](const ParamMap& m) { return integer(m, "n") >= lo; }};
}

Constraint p_ge_q() {
    return {"p ≥ q", [](const ParamMap& m) { return integer(m, "p") >= integer(m, "q"); }};
}

Constraint p_ge_q_ge_n() {
    return {"p ≥ q ≥ n", [](const ParamMap& m) {
                const long p = integer(m, "p"), q = integer(m, "q"), n = integer(m, "n");
                return p >= q && q >= n;
            }};
}

Constraint q_ge_n() {
    return {"q ≥ n", [](const ParamMap& m) { return integer(m, "q") >= integer(m, "n"); }};
}

// (t, ell) for T3..T10 / C3..C10, indexed from 3.
struct SecondFamilyShape {
    int t;
    int ell;
    long n_min;
};
constexpr std::array<SecondFamilyShape, 8> second_shapes{{
    {1, 2, 1}, {1, 1, 1}, {1, 3, 1}, {1, 4, 1}, {2, 2, 2}, {2, 1, 2}, {2, 3, 2}, {2, 4, 2},
}};

std::vector<LinearFractional> lemma_factors(const ParamMap& m) {
    std::vector<LinearFractional> f;
    for (int j = 1; j <= 2; ++j) {
        const auto s = std::to_string(j);
        f.push_back({rat(m, "a" + s), rat(m, "b" + s), rat(m, "c" + s), rat(m, "d" + s)});
    }
    return f;
}

std::vector<IdentitySpec> build() {
    std::vector<IdentitySpec> out;
    const std::vector<ParamSpec> abcn{rational_param("a"), rational_param("b"), rational_param("c"), upper_index("n")};
    const std::vector<ParamSpec> xyzn{rational_param("x"), rational_param("y"), rational_param("z"), upper_index("n")};
    const std::vector<ParamSpec> xyn{rational_param("x"), rational_param("y"), upper_index("n")};
    const std::vector<ParamSpec> pqn{grid_index("p"), grid_index("q"), upper_index("n")};

    out.push_back({"S0", abcn, {},
                   [](const ParamMap& m) {
                       const Rational &a = rat(m, "a"), &b = rat(m, "b"), &c = rat(m, "c");
                       const long n = integer(m, "n");
                       const std::array upper{a, b};
                       const std::array lower{c, Rational(1) + a + b - c - Rational(n)};
                       return hypergeom_terminating(upper, lower, n);
                   },
                   [](const ParamMap& m) { return saalschutz_rhs(rat(m, "a"), rat(m, "b"), rat(m, "c"), integer(m, "n")); },
                   "balanced 3F2(a,b,-n; c,1+a+b-c-n) at unit argument (Saalschütz)"});

    const auto xyz = [](const ParamMap& m) {
        return std::array{rat(m, "x"), rat(m, "y"), rat(m, "z")};
    };

    // S1, P1 and S3, P2: first family; S4, P3 and S5, P4: second family.
    struct SubstitutedEntry {
        const char* sub_id;
        const char* pre_id;
        bool first;
        int t;
        const char* sub_anchor;
        const char* pre_anchor;
    };
    const std::array<SubstitutedEntry, 4> substituted{{
        {"S1", "P1", true, 1, "Saalschütz with a->1+z, b->y, c->1+x",
         "x-derivative of S1 divided by 2x-y-z+n; singular at z = 2x-y+n"},
        {"S3", "P2", true, 2, "contiguous Saalschütz S2 with a->1+z, b->y-1, c->x",
         "x-derivative of S3 divided by 2x-y-z+n; singular at z = 2x-y+n"},
        {"S4", "P3", false, 1, "Saalschütz with a->1+x, b->y, c->1+z",
         "x-derivative of S4 divided by y-z-n; tends to T3 as z -> y-n"},
        {"S5", "P4", false, 2, "contiguous Saalschütz S2 with a->1+x, b->y-1, c->z",
         "x-derivative of S5 divided by y-z-n; tends to T7 as z -> y-n"},
    }};

    const auto add_substituted = [&](const SubstitutedEntry& e) {
        const int t = e.t;
        if (e.first) {
            out.push_back({e.sub_id, xyzn, {},
                           side([=](const ParamMap& m) {
                               auto [x, y, z] = xyz(m);
                               return fm::first_substituted_lhs(x, y, z, integer(m, "n"), t);
                           }),
                           side([=](const ParamMap& m) {
                               auto [x, y, z] = xyz(m);
                               return fm::first_substituted_rhs(x, y, z, integer(m, "n"), t);
                           }),
                           e.sub_anchor});
            out.push_back({e.pre_id, xyzn, {},
                           side([=](const ParamMap& m) {
                               auto [x, y, z] = xyz(m);
                               return fm::first_prelimit_lhs(x, y, z, integer(m, "n"), t);
                           }),
                           side([=](const ParamMap& m) {
                               auto [x, y, z] = xyz(m);
                               return fm::first_prelimit_rhs(x, y, z, integer(m, "n"), t);
                           }),
                           e.pre_anchor});
        } else {
            out.push_back({e.sub_id, xyzn, {},
                           side([=](const ParamMap& m) {
                               auto [x, y, z] = xyz(m);
                               return fm::second_substituted_lhs(x, y, z, integer(m, "n"), t);
                           }),
                           side([=](const ParamMap& m) {
                               auto [x, y, z] = xyz(m);
                               return fm::second_substituted_rhs(x, y, z, integer(m, "n"), t);
                           }),
                           e.sub_anchor});
            out.push_back({e.pre_id, xyzn, {},
                           side([=](const ParamMap& m) {
                               auto [x, y, z] = xyz(m);
                               return fm::second_prelimit_lhs(x, y, z, integer(m, "n"), t);
                           }),
                           side([=](const ParamMap& m) {
                               auto [x, y, z] = xyz(m);
                               return fm::second_prelimit_rhs(x, y, z, integer(m, "n"), t);
                           }),
                           e.pre_anchor});
        }
    };

    add_substituted(substituted[0]);
    out.push_back({"S2", abcn, {},
                   [](const ParamMap& m) {
                       const Rational &a = rat(m, "a"), &b = rat(m, "b"), &c = rat(m, "c");
                       const long n = integer(m, "n");
                       const std::array upper{a, b};
                       const std::array lower{Rational(1) + c, Rational(1) + a + b - c - Rational(n)};
                       return hypergeom_terminating(upper, lower, n);
                   },
                   side([](const ParamMap& m) {
                       return fm::contiguous_rhs(rat(m, "a"), rat(m, "b"), rat(m, "c"), integer(m, "n"));
                   }),
                   "balanced sum with lower parameter c replaced by 1+c (contiguous Saalschütz)"});
    add_substituted(substituted[1]);
    add_substituted(substituted[2]);
    add_substituted(substituted[3]);

    const auto xy = [](const ParamMap& m) { return std::pair{rat(m, "x"), rat(m, "y")}; };

    // Theorems.
    for (int t = 1; t <= 2; ++t) {
        out.push_back({"T" + std::to_string(t), xyn, {},
                       side([=](const ParamMap& m) {
                           auto [x, y] = xy(m);
                           return fm::first_family_lhs(x, y, integer(m, "n"), t);
                       }),
                       side([=](const ParamMap& m) {
                           auto [x, y] = xy(m);
                           return fm::first_family_rhs(x, y, integer(m, "n"), t);
                       }),
                       "first family, weight C(y," + std::to_string(t) +
                           ")/C(y+k," + std::to_string(t) + "), H_k^<2>(x); limit z -> 2x-y+n of P" +
                           std::to_string(t)});
    }
    const std::array<const char*, 8> second_anchor_tail{
        "limit z -> y-n of P3",
        "x-antiderivative of T3",
        "x-derivative of T3",
        "x-derivative of T5",
        "limit z -> y-n of P4",
        "x-antiderivative of T7",
        "x-derivative of T7; A_n, B_n",
        "x-derivative of T9; E_n, F_n, G_n",
    };
    for (std::size_t i = 0; i < second_shapes.size(); ++i) {
        const auto [t, ell, n_min] = second_shapes[i];
        out.push_back({"T" + std::to_string(i + 3), xyn, {n_at_least(n_min)},
                       side([=](const ParamMap& m) {
                           auto [x, y] = xy(m);
                           return fm::second_family_lhs(x, y, integer(m, "n"), t, ell);
                       }),
                       side([=](const ParamMap& m) {
                           auto [x, y] = xy(m);
                           return fm::second_family_rhs(x, y, integer(m, "n"), t, ell);
                       }),
                       "second family, weight C(y," + std::to_string(t) + ")/C(y+k," + std::to_string(t) +
                           "), H_k^<" + std::to_string(ell) + ">(x); " + second_anchor_tail[i]});
    }

    const auto pq = [](const ParamMap& m) {
        return std::array{integer(m, "p"), integer(m, "q"), integer(m, "n")};
    };

    // Corollaries.
    for (int t = 1; t <= 2; ++t) {
        out.push_back({"C" + std::to_string(t), pqn, {p_ge_q()},
                       side([=](const ParamMap& m) {
                           auto [p, q, n] = pq(m);
                           return fm::first_integer_lhs(p, q, n, t);
                       }),
                       side([=](const ParamMap& m) {
                           auto [p, q, n] = pq(m);
                           return fm::first_integer_rhs(p, q, n, t);
                       }),
                       "T" + std::to_string(t) + " at x = p, y = q with H_{p+k}^<2>"});
    }
    for (std::size_t i = 0; i < second_shapes.size(); ++i) {
        const auto [t, ell, n_min] = second_shapes[i];
        std::vector<Constraint> cs;
        cs.push_back(ell == 1 ? q_ge_n() : p_ge_q_ge_n());
        cs.push_back(n_at_least(n_min));
        out.push_back({"C" + std::to_string(i + 3), pqn, std::move(cs),
                       side([=](const ParamMap& m) {
                           auto [p, q, n] = pq(m);
                           return fm::second_integer_lhs(p, q, n, t, ell);
                       }),
                       side([=](const ParamMap& m) {
                           auto [p, q, n] = pq(m);
                           return fm::second_integer_rhs(p, q, n, t, ell);
                       }),
                       "T" + std::to_string(i + 3) + " at x = p, y = q with H_{p+k}^<" + std::to_string(ell) + ">"});
    }

    // Jet-checked relations.
    out.push_back({"D1",
                   {rational_param("x"), grid_index("r"), grid_index("s")},
                   {{"s ≤ r", [](const ParamMap& m) { return integer(m, "s") <= integer(m, "r"); }}},
                   side([](const ParamMap& m) {
                       return jet_gen_binomial(rat(m, "x"), integer(m, "r"), integer(m, "s"), 1)[1];
                   }),
                   side([](const ParamMap& m) {
                       const Rational& x = rat(m, "x");
                       const long r = integer(m, "r"), s = integer(m, "s");
                       return gen_binomial(x + Rational(r), s) *
                              (harmonic({1, r, x}).value() - harmonic({1, r - s, x}).value());
                   }),
                   "D_x C(x+r,s) = C(x+r,s){H_r(x) - H_{r-s}(x)}",
                   EntryKind::JetRelation});
    out.push_back({"D2",
                   {rational_param("x"), upper_index("n"), {"ell", ParamKind::PosInt, SampleRange::HarmonicOrder}},
                   {},
                   side([](const ParamMap& m) {
                       const int ell = static_cast<int>(integer(m, "ell"));
                       return jet_harmonic(rat(m, "x"), integer(m, "n"), ell, 1).value()[1];
                   }),
                   side([](const ParamMap& m) {
                       const int ell = static_cast<int>(integer(m, "ell"));
                       return Rational(-ell) * harmonic({ell + 1, integer(m, "n"), rat(m, "x")}).value();
                   }),
                   "D_x H_n^<l>(x) = -l H_n^<l+1>(x)",
                   EntryKind::JetRelation});

    std::vector<ParamSpec> lemma_params{rational_param("x")};
    for (int j = 1; j <= 2; ++j)
        for (const char* c : {"a", "b", "c", "d"})
            lemma_params.push_back(rational_param(c + std::to_string(j)));
    out.push_back({"L1", lemma_params,
                   {{"a_j x + b_j ≠ 0, c_j x + d_j ≠ 0",
                     [](const ParamMap& m) {
                         const Rational& x = rat(m, "x");
                         return std::ranges::all_of(lemma_factors(m), [&](const LinearFractional& f) {
                             return !(f.a * x + f.b).is_zero() && !(f.c * x + f.d).is_zero();
                         });
                     }}},
                   side([](const ParamMap& m) { return check_lemma1(lemma_factors(m), rat(m, "x")).derivative; }),
                   side([](const ParamMap& m) { return check_lemma1(lemma_factors(m), rat(m, "x")).closed_form; }),
                   "D_x prod (a_j x+b_j)/(c_j x+d_j) = prod(...) sum (a_j d_j - b_j c_j)/((a_j x+b_j)(c_j x+d_j)), two factors",
                   EntryKind::JetRelation});
    return out;
}

} // namespace

std::string_view to_string(ParamKind kind) {
    switch (kind) {
    case ParamKind::NonnegInt:
        return "nonneg-int";
    case ParamKind::PosInt:
        return "pos-int";
    case ParamKind::Rational:
        return "rational";
    }
    return "?";
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::Equal:
        return "equal";
    case Verdict::Unequal:
        return "unequal";
    case Verdict::Pole:
        return "pole";
    case Verdict::ConstraintViolation:
        return "constraint-violation";
    }
    return "?";
}

std::string IdentitySpec::param_text() const {
    std::string s;
    for (const auto& p : params) {
        if (!s.empty())
            s += ", ";
        s += p.name + ": " + std::string(to_string(p.kind));
    }
    return s;
}

std::string IdentitySpec::constraint_text() const {
    if (constraints.empty())
        return "none";
    std::string s;
    for (const auto& c : constraints) {
        if (!s.empty())
            s += ", ";
        s += c.description;
    }
    return s;
}

Registry::Registry() : entries_(build()) {}

const Registry& Registry::standard() {
    static const Registry registry;
    return registry;
}

const IdentitySpec* Registry::find(std::string_view id) const {
    const auto it = std::ranges::find(entries_, id, &IdentitySpec::id);
    return it == entries_.end() ? nullptr : &*it;
}

const IdentitySpec& Registry::at(std::string_view id) const {
    if (const auto* spec = find(id))
        return *spec;
    throw UnknownIdentity(id);
}

std::vector<IdentitySummary> list_identities() {
    std::vector<IdentitySummary> out;
    for (const auto& e : Registry::standard().entries())
        out.push_back({e.id, e.param_text(), e.constraint_text(), e.anchor});
    return out;
}

void validate_params(const IdentitySpec& spec, const ParamMap& params) {
    for (const auto& [name, value] : params)
        if (std::ranges::find(spec.params, name, &ParamSpec::name) == spec.params.end())
            throw std::invalid_argument(spec.id + " has no parameter '" + name + "'");
    for (const auto& p : spec.params) {
        const auto it = params.find(p.name);
        if (it == params.end())
            throw std::invalid_argument(spec.id + " needs parameter '" + p.name + "'");
        if (p.kind == ParamKind::Rational)
            continue;
        const auto v = it->second.to_long();
        const long lo = p.kind == ParamKind::PosInt ? 1 : 0;
        if (!v || *v < lo || *v > max_integer_param)
            throw std::invalid_argument(spec.id + " parameter '" + p.name + "' must be a " +
                                        std::string(to_string(p.kind)) + " (at most " +
                                        std::to_string(max_integer_param) + ")");
    }
}

Evaluation evaluate(const IdentitySpec& spec, const ParamMap& params) {
    validate_params(spec, params);
    Evaluation ev;
    for (const auto& c : spec.constraints) {
        if (!c.holds(params)) {
            ev.verdict = Verdict::ConstraintViolation;
            ev.detail = "violates " + c.description;
            return ev;
        }
    }
    ev.lhs = spec.lhs(params);
    ev.rhs = spec.rhs(params);
    if (ev.lhs->is_pole() || ev.rhs->is_pole()) {
        ev.verdict = Verdict::Pole;
        ev.detail = ev.lhs->is_pole() ? "lhs " + ev.lhs->pole().describe() : "rhs " + ev.rhs->pole().describe();
        return ev;
    }
    ev.verdict = ev.lhs->value() == ev.rhs->value() ? Verdict::Equal : Verdict::Unequal;
    return ev;
}

Evaluation evaluate_identity(std::string_view id, const ParamMap& params) {
    return evaluate(Registry::standard().at(id), params);
}

ConsistencyResult corollary_consistency(std::string_view theorem_id, std::string_view corollary_id, long p, long q,
                                        long n) {
    const auto& thm = Registry::standard().at(theorem_id);
    const auto& cor = Registry::standard().at(corollary_id);
    if (thm.id.size() < 2 || thm.id[0] != 'T' || cor.id[0] != 'C' || thm.id.substr(1) != cor.id.substr(1))
        throw std::invalid_argument("no corollary pairing between " + thm.id + " and " + cor.id);
    const int index = std::stoi(thm.id.substr(1));

    const ParamMap cor_params{{"p", Rational(p)}, {"q", Rational(q)}, {"n", Rational(n)}};
    const Evaluation ce = evaluate(cor, cor_params);
    if (ce.verdict != Verdict::Equal)
        return {ce.verdict, "corollary " + std::string(to_string(ce.verdict)) + (ce.detail.empty() ? "" : ": ") +
                                ce.detail};

    const ParamMap thm_params{{"x", Rational(p)}, {"y", Rational(q)}, {"n", Rational(n)}};
    const Evaluation te = evaluate(thm, thm_params);
    if (te.verdict == Verdict::Pole || te.verdict == Verdict::ConstraintViolation)
        return {te.verdict, "theorem at x=p, y=q: " + te.detail};

    int t = 1;
    int ell = 2;
    if (index <= 2) {
        t = index;
    } else {
        t = second_shapes[index - 3].t;
        ell = second_shapes[index - 3].ell;
    }

    try {
        const Rational shift = harmonic({ell, p, Rational(0)}).value();
        Rational weights, closed;
        if (index <= 2) {
            weights = fm::first_integer_weight_sum(p, q, n, t);
            closed = fm::first_substituted_rhs(Rational(p), Rational(q), Rational(2 * p - q + n), n, t);
        } else {
            weights = fm::second_integer_weight_sum(p, q, n, t);
            closed = fm::second_substituted_rhs(Rational(p), Rational(q), Rational(q - n), n, t);
        }
        if (weights != closed)
            return {Verdict::Unequal, "weight sum " + weights.str() + " differs from substituted closed form " +
                                          closed.str()};
        if (te.lhs->value() + shift * weights != ce.lhs->value())
            return {Verdict::Unequal, "shifted theorem lhs differs from corollary lhs"};
        if (te.rhs->value() + shift * closed != ce.rhs->value())
            return {Verdict::Unequal, "shifted theorem rhs differs from corollary rhs"};
    } catch (const PoleError& e) {
        return {Verdict::Pole, "substituted closed form: " + e.pole().describe()};
    }
    return {Verdict::Equal, "consistent"};
}

} // namespace hid
