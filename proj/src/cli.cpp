#include "hid/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>

#include "CLI11.hpp"

#include "hid/registry.hpp"
#include "hid/verifier.hpp"

namespace hid::cli {

namespace {

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    const char* env = std::getenv("HID_SEED");
    if (env == nullptr || *env == '\0')
        return 42;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string_view(env).size())
            throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError("HID_SEED must be a non-negative integer, got '" + std::string(env) + "'");
    }
}

std::string decimal(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", r.to_double());
    return buf;
}

std::string side_line(const EvalOutcome& side) {
    if (side.is_pole())
        return to_text(side);
    return side.value().str() + " (" + decimal(side.value()) + ")";
}

ParamMap parse_params(const std::vector<std::string>& items) {
    ParamMap m;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--param expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        try {
            if (!m.emplace(name, Rational::parse(item.substr(eq + 1))).second)
                throw UsageError("parameter '" + name + "' given twice");
        } catch (const std::invalid_argument& e) {
            throw UsageError("parameter '" + name + "': " + e.what());
        }
    }
    return m;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open '" + path + "' for writing");
    file << text;
    if (!file.flush())
        throw UsageError("failed writing '" + path + "'");
}

int report_status(const VerificationReport& r) { return r.ok() ? 0 : exit_failure; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::uint64_t seed_default = 42;
    try {
        seed_default = default_seed();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    CLI::App app{"Exact verifier for a catalogue of harmonic-number summation identities"};
    app.name("hid");
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "Print the identity registry");

    auto* eval = app.add_subcommand("eval", "Evaluate both sides of one identity");
    std::string eval_id;
    std::vector<std::string> eval_params;
    eval->add_option("--id", eval_id, "Identity id")->required();
    eval->add_option("--param", eval_params, "name=value, value as p/q or integer")->allow_extra_args(false);

    auto* verify = app.add_subcommand("verify", "Seeded random sweep");
    std::vector<std::string> verify_ids;
    bool verify_all = false;
    long samples = 200;
    std::uint64_t seed = seed_default;
    long max_n = 6;
    std::string format = "json";
    std::string out_path;
    auto* id_opt = verify->add_option("--id", verify_ids, "Identity id (repeatable)")->allow_extra_args(false);
    verify->add_flag("--all", verify_all, "Every registry entry (default)")->excludes(id_opt);
    verify->add_option("--samples", samples, "Samples per identity")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "Seed (default HID_SEED or 42)");
    verify->add_option("--max-n", max_n, "Upper bound for n")->check(CLI::NonNegativeNumber);
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--out", out_path, "Write the report here instead of stdout");

    auto* lemma = app.add_subcommand("lemma", "Linear-fractional product derivative check");
    int s_max = 5;
    long trials = 100;
    lemma->add_option("--s-max", s_max, "Largest factor count")->check(CLI::PositiveNumber);
    lemma->add_option("--trials", trials, "Random instances")->check(CLI::NonNegativeNumber);
    lemma->add_option("--seed", seed, "Seed (default HID_SEED or 42)");

    auto* limits = app.add_subcommand("limits", "Jet extraction of the pre-limit identities");
    int order = 5;
    limits->add_option("--samples", samples, "Samples per limit")->check(CLI::NonNegativeNumber);
    limits->add_option("--seed", seed, "Seed (default HID_SEED or 42)");
    limits->add_option("--order", order, "Jet expansion order")->check(CLI::Range(1, 64));

    auto* chain = app.add_subcommand("chain", "Derivative relations between theorems");
    chain->add_option("--samples", samples, "Samples per link")->check(CLI::NonNegativeNumber);
    chain->add_option("--seed", seed, "Seed (default HID_SEED or 42)");

    std::vector<std::string> argv_store{"hid"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*list) {
            for (const auto& s : list_identities())
                out << std::left << std::setw(4) << s.id << "  " << s.params << "  [" << s.constraints << "]  "
                    << s.anchor << '\n';
            return 0;
        }
        if (*eval) {
            Evaluation ev;
            try {
                ev = evaluate_identity(eval_id, parse_params(eval_params));
            } catch (const std::out_of_range& e) {
                throw UsageError(e.what());
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (ev.lhs)
                out << "lhs=" << side_line(*ev.lhs) << '\n' << "rhs=" << side_line(*ev.rhs) << '\n';
            out << "verdict=" << to_string(ev.verdict);
            if (!ev.detail.empty())
                out << " (" << ev.detail << ')';
            out << '\n';
            return ev.verdict == Verdict::Unequal ? exit_failure : 0;
        }
        if (*verify) {
            SweepConfig cfg;
            cfg.ids = verify_ids;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.max_n = max_n;
            VerificationReport report;
            try {
                report = sweep(cfg);
            } catch (const UnknownIdentity& e) {
                throw UsageError(e.what());
            }
            const std::string text =
                format == "csv" ? to_csv(report) : format == "text" ? to_text(report) : to_json(report);
            emit(text, out_path, out);
            return report_status(report);
        }
        if (*lemma) {
            const auto report = verify_lemma(seed, trials, s_max);
            out << to_text(report);
            return report_status(report);
        }
        if (*limits) {
            const auto report = verify_limits(seed, samples, order);
            out << to_text(report);
            return report_status(report);
        }
        if (*chain) {
            const auto report = verify_derivative_chain(seed, samples);
            out << to_text(report);
            return report_status(report);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace hid::cli
