#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hid/outcome.hpp"
#include "hid/rational.hpp"

namespace hid {

enum class ParamKind { NonnegInt, PosInt, Rational };

/// Where the sampler draws an integer parameter from.
enum class SampleRange {
    Rational,      ///< random rational of bounded height
    UpperIndex,    ///< [0, max-n]
    GridIndex,     ///< [0, grid bound]
    HarmonicOrder, ///< [1, 3]
};

struct ParamSpec {
    std::string name;
    ParamKind kind;
    SampleRange range;
};

using ParamMap = std::map<std::string, Rational, std::less<>>;

struct Constraint {
    std::string description;
    std::function<bool(const ParamMap&)> holds;
};

enum class EntryKind {
    SumIdentity, ///< finite sum against a closed form
    JetRelation, ///< derivative read from a jet against a closed form
};

using SideEvaluator = std::function<EvalOutcome(const ParamMap&)>;

struct IdentitySpec {
    std::string id;
    std::vector<ParamSpec> params;
    std::vector<Constraint> constraints;
    SideEvaluator lhs;
    SideEvaluator rhs;
    std::string anchor;
    EntryKind kind = EntryKind::SumIdentity;

    [[nodiscard]] std::string param_text() const;      ///< "x: rational, y: rational, n: nonneg-int"
    [[nodiscard]] std::string constraint_text() const; ///< "p ≥ q ≥ n, n ≥ 2", or "none"
};

class UnknownIdentity : public std::out_of_range {
public:
    explicit UnknownIdentity(std::string_view id) : std::out_of_range("unknown identity id '" + std::string(id) + "'") {}
};

/// The fixed, immutable identity catalogue.
class Registry {
public:
    static const Registry& standard();

    [[nodiscard]] const std::vector<IdentitySpec>& entries() const { return entries_; }
    [[nodiscard]] const IdentitySpec* find(std::string_view id) const;
    /// Throws UnknownIdentity.
    [[nodiscard]] const IdentitySpec& at(std::string_view id) const;

private:
    Registry();
    std::vector<IdentitySpec> entries_;
};

std::string_view to_string(ParamKind kind);

enum class Verdict { Equal, Unequal, Pole, ConstraintViolation };
std::string_view to_string(Verdict verdict);

struct Evaluation {
    std::optional<EvalOutcome> lhs; ///< absent on constraint violation
    std::optional<EvalOutcome> rhs;
    Verdict verdict = Verdict::ConstraintViolation;
    std::string detail; ///< failing constraint or pole description
};

struct IdentitySummary {
    std::string id;
    std::string params;
    std::string constraints;
    std::string anchor;
};

std::vector<IdentitySummary> list_identities();

/// Throws std::invalid_argument when params miss a schema entry, carry an
/// unknown name, or give a non-integer / out-of-kind value.
void validate_params(const IdentitySpec& spec, const ParamMap& params);

Evaluation evaluate(const IdentitySpec& spec, const ParamMap& params);

/// Throws UnknownIdentity or std::invalid_argument (schema mismatch).
Evaluation evaluate_identity(std::string_view id, const ParamMap& params);

struct ConsistencyResult {
    Verdict verdict = Verdict::ConstraintViolation;
    std::string detail;
};

/// Checks a corollary at integer (p, q, n) against its theorem at x = p, y = q.
///
/// Splitting H_{p+k}^<l> = H_k^<l>(p) + H_p^<l> turns the corollary sum into
/// the theorem sum plus H_p^<l> times the bare weight sum, and that weight sum
/// is a substituted Saalschütz closed form. All of the following must hold:
/// the corollary's two sides agree, the weight sum equals its closed form,
/// and both theorem sides shifted by H_p^<l> times that closed form
/// reproduce the corresponding corollary sides.
ConsistencyResult corollary_consistency(std::string_view theorem_id, std::string_view corollary_id, long p, long q,
                                        long n);

} // namespace hid
