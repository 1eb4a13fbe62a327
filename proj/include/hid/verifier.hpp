#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hid/registry.hpp"

namespace hid {

struct SweepConfig {
    std::vector<std::string> ids; ///< empty means every registry entry
    long samples = 200;
    std::uint64_t seed = 42;
    long max_n = 6;
    long height = 12;     ///< rational numerator bound
    long grid_bound = 8;  ///< upper bound for integer grid parameters (p, q, r, s)
    unsigned threads = 0; ///< 0 picks std::thread::hardware_concurrency()
};

using ParamEcho = std::vector<std::pair<std::string, std::string>>;

struct Failure {
    ParamEcho params;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct TallyEntry {
    std::string id;
    long attempted = 0;
    long passed = 0;
    long poles_skipped = 0;
    long constraint_skipped = 0;
    std::vector<Failure> failures;

    /// attempted = passed + failures + poles + constraint skips
    [[nodiscard]] bool balanced() const;
};

struct VerificationReport {
    std::string kind; ///< sweep, grid, chain, limits, lemma
    std::uint64_t seed = 0;
    ParamEcho config;
    std::vector<TallyEntry> entries;
    double wall_time_ms = 0;

    [[nodiscard]] long total_failures() const;
    [[nodiscard]] bool ok() const { return total_failures() == 0; }
    [[nodiscard]] const TallyEntry* find(std::string_view id) const;
};

/// Randomised sweep over registry entries. Throws UnknownIdentity.
VerificationReport sweep(const SweepConfig& config);

/// Every corollary on the integer grid p, q, n in [0, max_p], together with
/// corollary_consistency against its theorem on the same points.
VerificationReport sweep_corollary_grid(long max_p = 8);

/// One derivative link: the order-`order` x-derivative of both sides of `from`
/// must equal `factor` times the corresponding sides of `to`.
struct ChainLink {
    std::string from;
    std::string to;
    int order;
    long factor;

    [[nodiscard]] std::string label() const;
};

const std::vector<ChainLink>& chain_links();

enum class CheckVerdict { Pass, Fail, Pole, ConstraintSkip };

struct CheckResult {
    CheckVerdict verdict = CheckVerdict::ConstraintSkip;
    std::string lhs;
    std::string rhs;
    std::string note;
};

CheckResult check_chain_link(const ChainLink& link, const Rational& x, const Rational& y, long n);

/// D2 for ell in {1,2,3}, D1 for every 0 <= s <= r <= 8, and every chain link.
VerificationReport verify_derivative_chain(std::uint64_t seed, long samples);

enum class LimitKind { P1ToT1, P2ToT2, P3ToT3, P4ToT7, FragmentA, FragmentB, Reflection };

std::string_view to_string(LimitKind kind);

/// Expands the pre-limit identity in z about its limit point and compares the
/// constant terms with each other and with the theorem statement.
CheckResult check_limit(LimitKind kind, const Rational& x, const Rational& y, long n, int order = 5);

VerificationReport verify_limits(std::uint64_t seed, long samples, int order = 5);

/// Random linear-fractional products with 1 <= s <= s_max factors.
VerificationReport verify_lemma(std::uint64_t seed, long trials, int s_max = 5);

// Serialisation. Rationals appear verbatim as "p/q" strings.
std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

} // namespace hid
