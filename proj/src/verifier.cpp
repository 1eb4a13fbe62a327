#include "hid/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "hid/core.hpp"
#include "hid/formulas.hpp"
#include "hid/jet.hpp"
#include "hid/sampling.hpp"

namespace hid {

namespace {

namespace fm = formulas;

constexpr int max_resample = 1000;

struct SampleResult {
    CheckVerdict verdict = CheckVerdict::ConstraintSkip;
    Failure failure; ///< filled only for Fail
};

void tally(TallyEntry& entry, SampleResult&& r) {
    ++entry.attempted;
    switch (r.verdict) {
    case CheckVerdict::Pass:
        ++entry.passed;
        break;
    case CheckVerdict::Fail:
        entry.failures.push_back(std::move(r.failure));
        break;
    case CheckVerdict::Pole:
        ++entry.poles_skipped;
        break;
    case CheckVerdict::ConstraintSkip:
        ++entry.constraint_skipped;
        break;
    }
}

// Runs fn(i) for i in [0, count) on a worker pool; results keep index order.
std::vector<SampleResult> run_indexed(long count, unsigned threads, const std::function<SampleResult(long)>& fn) {
    std::vector<SampleResult> out(static_cast<std::size_t>(std::max(count, 0L)));
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<long>(threads, std::max(count, 1L)));
    if (threads <= 1) {
        for (long i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<long> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (long i = next++; i < count; i = next++)
                    out[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next = count;
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

ParamEcho echo(const std::vector<ParamSpec>& schema, const ParamMap& params) {
    ParamEcho out;
    for (const auto& p : schema)
        out.emplace_back(p.name, params.find(p.name)->second.str());
    return out;
}

std::string side_text(const std::optional<EvalOutcome>& side) { return side ? to_text(*side) : "-"; }

SampleResult classify(const IdentitySpec& spec, const ParamMap& params) {
    const Evaluation ev = evaluate(spec, params);
    SampleResult r;
    switch (ev.verdict) {
    case Verdict::Equal:
        r.verdict = CheckVerdict::Pass;
        break;
    case Verdict::Unequal:
        r.verdict = CheckVerdict::Fail;
        r.failure = {echo(spec.params, params), side_text(ev.lhs), side_text(ev.rhs), {}};
        break;
    case Verdict::Pole:
        r.verdict = CheckVerdict::Pole;
        break;
    case Verdict::ConstraintViolation:
        r.verdict = CheckVerdict::ConstraintSkip;
        break;
    }
    return r;
}

ParamMap draw(const IdentitySpec& spec, const SweepConfig& cfg, SampleStream& rng) {
    ParamMap m;
    for (const auto& p : spec.params) {
        switch (p.range) {
        case SampleRange::Rational:
            m[p.name] = rng.rational(cfg.height);
            break;
        case SampleRange::UpperIndex:
            m[p.name] = Rational(rng.uniform(0, cfg.max_n));
            break;
        case SampleRange::GridIndex:
            m[p.name] = Rational(rng.uniform(0, cfg.grid_bound));
            break;
        case SampleRange::HarmonicOrder:
            m[p.name] = Rational(rng.uniform(1, 3));
            break;
        }
    }
    return m;
}

bool satisfies(const IdentitySpec& spec, const ParamMap& m) {
    return std::ranges::all_of(spec.constraints, [&](const Constraint& c) { return c.holds(m); });
}

class Stopwatch {
public:
    [[nodiscard]] double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Shape of a theorem: family, weight index t and harmonic order ell.
struct TheoremShape {
    bool first;
    int t;
    int ell;
    long n_min;
};

TheoremShape theorem_shape(std::string_view id) {
    static constexpr std::array<TheoremShape, 10> shapes{{
        {true, 1, 2, 0},
        {true, 2, 2, 0},
        {false, 1, 2, 1},
        {false, 1, 1, 1},
        {false, 1, 3, 1},
        {false, 1, 4, 1},
        {false, 2, 2, 2},
        {false, 2, 1, 2},
        {false, 2, 3, 2},
        {false, 2, 4, 2},
    }};
    const int index = id.size() >= 2 && id[0] == 'T' ? std::stoi(std::string(id.substr(1))) : 0;
    if (index < 1 || index > 10)
        throw UnknownIdentity(id);
    return shapes[static_cast<std::size_t>(index - 1)];
}

template <class T>
std::pair<T, T> theorem_sides(const TheoremShape& s, const T& x, const T& y, long n) {
    if (s.first)
        return {fm::first_family_lhs(x, y, n, s.t), fm::first_family_rhs(x, y, n, s.t)};
    return {fm::second_family_lhs(x, y, n, s.t, s.ell), fm::second_family_rhs(x, y, n, s.t, s.ell)};
}

ParamEcho xyn_echo(const Rational& x, const Rational& y, long n) {
    return {{"x", x.str()}, {"y", y.str()}, {"n", std::to_string(n)}};
}

SampleResult to_sample(CheckResult&& c, ParamEcho params) {
    SampleResult r;
    r.verdict = c.verdict;
    if (c.verdict == CheckVerdict::Fail)
        r.failure = {std::move(params), std::move(c.lhs), std::move(c.rhs), std::move(c.note)};
    return r;
}

VerificationReport make_report(std::string kind, std::uint64_t seed, ParamEcho config) {
    VerificationReport r;
    r.kind = std::move(kind);
    r.seed = seed;
    r.config = std::move(config);
    return r;
}

} // namespace

bool TallyEntry::balanced() const {
    return attempted == passed + static_cast<long>(failures.size()) + poles_skipped + constraint_skipped;
}

long VerificationReport::total_failures() const {
    long total = 0;
    for (const auto& e : entries)
        total += static_cast<long>(e.failures.size());
    return total;
}

const TallyEntry* VerificationReport::find(std::string_view id) const {
    const auto it = std::ranges::find(entries, id, &TallyEntry::id);
    return it == entries.end() ? nullptr : &*it;
}

VerificationReport sweep(const SweepConfig& cfg) {
    const Stopwatch clock;
    const auto& registry = Registry::standard();
    std::vector<const IdentitySpec*> specs;
    if (cfg.ids.empty()) {
        for (const auto& s : registry.entries())
            specs.push_back(&s);
    } else {
        for (const auto& id : cfg.ids)
            specs.push_back(&registry.at(id));
    }

    auto report = make_report("sweep", cfg.seed,
                              {{"samples", std::to_string(cfg.samples)},
                               {"max_n", std::to_string(cfg.max_n)},
                               {"height", std::to_string(cfg.height)},
                               {"grid_bound", std::to_string(cfg.grid_bound)}});
    for (const IdentitySpec* spec : specs) {
        TallyEntry entry{.id = spec->id};
        auto results = run_indexed(cfg.samples, cfg.threads, [&](long i) {
            SampleStream rng(cfg.seed, spec->id, static_cast<std::uint64_t>(i));
            ParamMap params = draw(*spec, cfg, rng);
            for (int tries = 1; tries < max_resample && !satisfies(*spec, params); ++tries)
                params = draw(*spec, cfg, rng);
            return classify(*spec, params);
        });
        for (auto& r : results)
            tally(entry, std::move(r));
        report.entries.push_back(std::move(entry));
    }
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

VerificationReport sweep_corollary_grid(long max_p) {
    const Stopwatch clock;
    auto report = make_report("grid", 0, {{"max_p", std::to_string(max_p)}});
    const auto& registry = Registry::standard();
    for (int i = 1; i <= 10; ++i) {
        const std::string cid = "C" + std::to_string(i);
        const std::string tid = "T" + std::to_string(i);
        const auto& spec = registry.at(cid);
        TallyEntry direct{.id = cid};
        TallyEntry consistency{.id = tid + "~" + cid};
        for (long p = 0; p <= max_p; ++p) {
            for (long q = 0; q <= max_p; ++q) {
                for (long n = 0; n <= max_p; ++n) {
                    const ParamMap params{{"p", Rational(p)}, {"q", Rational(q)}, {"n", Rational(n)}};
                    tally(direct, classify(spec, params));

                    const auto c = corollary_consistency(tid, cid, p, q, n);
                    SampleResult r;
                    switch (c.verdict) {
                    case Verdict::Equal:
                        r.verdict = CheckVerdict::Pass;
                        break;
                    case Verdict::Unequal:
                        r.verdict = CheckVerdict::Fail;
                        r.failure = {echo(spec.params, params), "-", "-", c.detail};
                        break;
                    case Verdict::Pole:
                        r.verdict = CheckVerdict::Pole;
                        break;
                    case Verdict::ConstraintViolation:
                        r.verdict = CheckVerdict::ConstraintSkip;
                        break;
                    }
                    tally(consistency, std::move(r));
                }
            }
        }
        report.entries.push_back(std::move(direct));
        report.entries.push_back(std::move(consistency));
    }
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

std::string ChainLink::label() const {
    return from + "->" + to + (order == 1 ? "" : "@" + std::to_string(order));
}

const std::vector<ChainLink>& chain_links() {
    static const std::vector<ChainLink> links{
        {"T3", "T5", 1, -2}, {"T5", "T6", 1, -3}, {"T7", "T9", 1, -2}, {"T9", "T10", 1, -3},
        {"T4", "T3", 1, -1}, {"T8", "T7", 1, -1}, {"T3", "T6", 2, 6},  {"T7", "T10", 2, 6},
    };
    return links;
}

CheckResult check_chain_link(const ChainLink& link, const Rational& x, const Rational& y, long n) {
    const TheoremShape from = theorem_shape(link.from);
    const TheoremShape to = theorem_shape(link.to);
    CheckResult out;
    if (n < std::max(from.n_min, to.n_min)) {
        out.note = "n below theorem constraint";
        return out;
    }
    try {
        const Jet xj = Jet::variable(x, link.order);
        const Jet yj = Jet::constant(y, link.order);
        const auto [jl, jr] = theorem_sides(from, xj, yj, n);
        const auto [bl, br] = theorem_sides(to, x, y, n);
        const Rational dl = jl.derivative(link.order);
        const Rational dr = jr.derivative(link.order);
        const Rational f(link.factor);
        if (dl == f * bl && dr == f * br) {
            out.verdict = CheckVerdict::Pass;
            return out;
        }
        out.verdict = CheckVerdict::Fail;
        out.lhs = dl.str() + " vs " + (f * bl).str();
        out.rhs = dr.str() + " vs " + (f * br).str();
        out.note = "derivative of " + link.from + " against " + std::to_string(link.factor) + " * " + link.to;
    } catch (const PoleError& e) {
        out.verdict = CheckVerdict::Pole;
        out.note = e.pole().describe();
    }
    return out;
}

VerificationReport verify_derivative_chain(std::uint64_t seed, long samples) {
    const Stopwatch clock;
    auto report = make_report("chain", seed, {{"samples", std::to_string(samples)}});
    const auto& registry = Registry::standard();

    {
        const auto& spec = registry.at("D2");
        TallyEntry entry{.id = "D2"};
        for (long i = 0; i < samples; ++i) {
            SampleStream rng(seed, "chain/D2", static_cast<std::uint64_t>(i));
            ParamMap m{{"x", rng.rational(12)}, {"n", Rational(rng.uniform(0, 10))},
                       {"ell", Rational(rng.uniform(1, 3))}};
            tally(entry, classify(spec, m));
        }
        report.entries.push_back(std::move(entry));
    }
    {
        const auto& spec = registry.at("D1");
        TallyEntry entry{.id = "D1"};
        for (long i = 0; i < samples; ++i) {
            SampleStream rng(seed, "chain/D1", static_cast<std::uint64_t>(i));
            const Rational x = rng.rational(12);
            for (long r = 0; r <= 8; ++r)
                for (long s = 0; s <= r; ++s)
                    tally(entry, classify(spec, {{"x", x}, {"r", Rational(r)}, {"s", Rational(s)}}));
        }
        report.entries.push_back(std::move(entry));
    }
    for (const auto& link : chain_links()) {
        TallyEntry entry{.id = link.label()};
        const long n_min = std::max(theorem_shape(link.from).n_min, theorem_shape(link.to).n_min);
        for (long i = 0; i < samples; ++i) {
            SampleStream rng(seed, "chain/" + link.label(), static_cast<std::uint64_t>(i));
            const Rational x = rng.rational(12);
            const Rational y = rng.rational(12);
            const long n = rng.uniform(n_min, 6);
            tally(entry, to_sample(check_chain_link(link, x, y, n), xyn_echo(x, y, n)));
        }
        report.entries.push_back(std::move(entry));
    }
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

std::string_view to_string(LimitKind kind) {
    switch (kind) {
    case LimitKind::P1ToT1:
        return "P1->T1";
    case LimitKind::P2ToT2:
        return "P2->T2";
    case LimitKind::P3ToT3:
        return "P3->T3";
    case LimitKind::P4ToT7:
        return "P4->T7";
    case LimitKind::FragmentA:
        return "limit-a";
    case LimitKind::FragmentB:
        return "limit-b";
    case LimitKind::Reflection:
        return "reflection";
    }
    return "?";
}

namespace {

long limit_n_min(LimitKind kind) {
    switch (kind) {
    case LimitKind::P3ToT3:
        return 1;
    case LimitKind::P4ToT7:
        return 2;
    default:
        return 0;
    }
}

CheckResult compare_limit(const Outcome<LimitValues>& lim, const std::optional<std::pair<Rational, Rational>>& target) {
    CheckResult out;
    if (lim.is_pole()) {
        out.verdict = CheckVerdict::Pole;
        out.note = "expansion: " + lim.pole().describe();
        return out;
    }
    const auto& v = lim.value();
    const bool good = v.lhs == v.rhs && (!target || (target->first == v.lhs && target->second == v.rhs));
    out.verdict = good ? CheckVerdict::Pass : CheckVerdict::Fail;
    if (!good) {
        out.lhs = v.lhs.str();
        out.rhs = v.rhs.str();
        if (target)
            out.note = "theorem lhs " + target->first.str() + ", rhs " + target->second.str();
    }
    return out;
}

} // namespace

CheckResult check_limit(LimitKind kind, const Rational& x, const Rational& y, long n, int order) {
    CheckResult out;
    if (n < limit_n_min(kind)) {
        out.note = "n below theorem constraint";
        return out;
    }
    const auto cx = [x](const Jet& z) { return Jet::constant(x, z.order()); };
    const auto cy = [y](const Jet& z) { return Jet::constant(y, z.order()); };
    try {
        switch (kind) {
        case LimitKind::P1ToT1:
        case LimitKind::P2ToT2: {
            const int t = kind == LimitKind::P1ToT1 ? 1 : 2;
            const auto lim = limit_via_jet(
                [&](const Jet& z) { return fm::first_prelimit_lhs(cx(z), cy(z), z, n, t); },
                [&](const Jet& z) { return fm::first_prelimit_rhs(cx(z), cy(z), z, n, t); },
                Rational(2) * x - y + Rational(n), order);
            return compare_limit(lim, theorem_sides(theorem_shape(t == 1 ? "T1" : "T2"), x, y, n));
        }
        case LimitKind::P3ToT3:
        case LimitKind::P4ToT7: {
            const int t = kind == LimitKind::P3ToT3 ? 1 : 2;
            const auto lim = limit_via_jet(
                [&](const Jet& z) { return fm::second_prelimit_lhs(cx(z), cy(z), z, n, t); },
                [&](const Jet& z) { return fm::second_prelimit_rhs(cx(z), cy(z), z, n, t); }, y - Rational(n),
                order);
            return compare_limit(lim, theorem_sides(theorem_shape(t == 1 ? "T3" : "T7"), x, y, n));
        }
        case LimitKind::FragmentA:
        case LimitKind::FragmentB: {
            const bool a = kind == LimitKind::FragmentA;
            const Rational closed = -harmonic({2, n, a ? x - y : x}).value();
            const auto lim = limit_via_jet(
                [&](const Jet& z) {
                    return a ? fm::limit_a_fragment(cx(z), cy(z), z, n) : fm::limit_b_fragment(cx(z), cy(z), z, n);
                },
                [&](const Jet& z) { return Jet::constant(closed, z.order()); }, Rational(2) * x - y + Rational(n),
                order);
            return compare_limit(lim, std::nullopt);
        }
        case LimitKind::Reflection: {
            const Rational reflected = harmonic({2, n, y - x - Rational(n + 1)}).value();
            const Rational direct = harmonic({2, n, x - y}).value();
            out.verdict = reflected == direct ? CheckVerdict::Pass : CheckVerdict::Fail;
            if (out.verdict == CheckVerdict::Fail) {
                out.lhs = reflected.str();
                out.rhs = direct.str();
            }
            return out;
        }
        }
    } catch (const PoleError& e) {
        out.verdict = CheckVerdict::Pole;
        out.note = e.pole().describe();
    }
    return out;
}

VerificationReport verify_limits(std::uint64_t seed, long samples, int order) {
    const Stopwatch clock;
    auto report =
        make_report("limits", seed, {{"samples", std::to_string(samples)}, {"order", std::to_string(order)}});
    for (LimitKind kind : {LimitKind::P1ToT1, LimitKind::P2ToT2, LimitKind::P3ToT3, LimitKind::P4ToT7,
                           LimitKind::FragmentA, LimitKind::FragmentB, LimitKind::Reflection}) {
        const std::string id(to_string(kind));
        TallyEntry entry{.id = id};
        for (long i = 0; i < samples; ++i) {
            SampleStream rng(seed, "limits/" + id, static_cast<std::uint64_t>(i));
            const Rational x = rng.rational(12);
            const Rational y = rng.rational(12);
            const long n = rng.uniform(limit_n_min(kind), 6);
            tally(entry, to_sample(check_limit(kind, x, y, n, order), xyn_echo(x, y, n)));
        }
        report.entries.push_back(std::move(entry));
    }
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

VerificationReport verify_lemma(std::uint64_t seed, long trials, int s_max) {
    if (s_max < 1)
        throw std::invalid_argument("lemma check needs s_max >= 1");
    const Stopwatch clock;
    auto report = make_report("lemma", seed, {{"trials", std::to_string(trials)}, {"s_max", std::to_string(s_max)}});
    TallyEntry entry{.id = "L1"};
    for (long i = 0; i < trials; ++i) {
        SampleStream rng(seed, "lemma/L1", static_cast<std::uint64_t>(i));
        const Rational x0 = rng.rational(12);
        const long s = rng.uniform(1, s_max);
        std::vector<LinearFractional> factors;
        ParamEcho params{{"x", x0.str()}, {"s", std::to_string(s)}};
        for (long j = 1; j <= s; ++j) {
            LinearFractional f{rng.rational(6), rng.rational(6), rng.rational(6), rng.rational(6)};
            const auto k = std::to_string(j);
            params.emplace_back("a" + k, f.a.str());
            params.emplace_back("b" + k, f.b.str());
            params.emplace_back("c" + k, f.c.str());
            params.emplace_back("d" + k, f.d.str());
            factors.push_back(f);
        }
        const Lemma1Check c = check_lemma1(factors, x0);
        SampleResult r;
        switch (c.status) {
        case CheckStatus::Pass:
            r.verdict = CheckVerdict::Pass;
            break;
        case CheckStatus::Fail:
            r.verdict = CheckVerdict::Fail;
            r.failure = {std::move(params), c.derivative.str(), c.closed_form.str(), {}};
            break;
        case CheckStatus::Skipped:
            r.verdict = CheckVerdict::ConstraintSkip;
            break;
        }
        tally(entry, std::move(r));
    }
    report.entries.push_back(std::move(entry));
    report.wall_time_ms = clock.elapsed_ms();
    return report;
}

} // namespace hid
