#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "hid/verifier.hpp"

namespace hid {

namespace {

using nlohmann::ordered_json;

// Appends " (decimal)" when the text is a bare rational.
std::string with_decimal(const std::string& text) {
    try {
        const Rational r = Rational::parse(text);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", r.to_double());
        return text + " (" + buf + ")";
    } catch (const std::invalid_argument&) {
        return text;
    }
}

} // namespace

std::string to_json(const VerificationReport& report) {
    ordered_json j;
    j["kind"] = report.kind;
    j["seed"] = report.seed;
    ordered_json config = ordered_json::object();
    for (const auto& [k, v] : report.config)
        config[k] = v;
    j["config"] = config;
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json je;
        je["id"] = e.id;
        je["attempted"] = e.attempted;
        je["passed"] = e.passed;
        je["poles_skipped"] = e.poles_skipped;
        je["constraint_skipped"] = e.constraint_skipped;
        ordered_json failures = ordered_json::array();
        for (const auto& f : e.failures) {
            ordered_json params = ordered_json::object();
            for (const auto& [k, v] : f.params)
                params[k] = v;
            ordered_json jf{{"params", params}, {"lhs", f.lhs}, {"rhs", f.rhs}};
            if (!f.note.empty())
                jf["note"] = f.note;
            failures.push_back(std::move(jf));
        }
        je["failures"] = std::move(failures);
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["total_failures"] = report.total_failures();
    j["wall_time_ms"] = static_cast<long long>(report.wall_time_ms + 0.5);
    return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "id,attempted,passed,failures,poles_skipped,constraint_skipped\n";
    for (const auto& e : report.entries)
        os << e.id << ',' << e.attempted << ',' << e.passed << ',' << e.failures.size() << ',' << e.poles_skipped
           << ',' << e.constraint_skipped << '\n';
    return os.str();
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << report.kind << " report, seed " << report.seed;
    for (const auto& [k, v] : report.config)
        os << ", " << k << ' ' << v;
    os << '\n';
    for (const auto& e : report.entries) {
        os << "  " << e.id << ": " << e.passed << '/' << e.attempted << " passed, " << e.failures.size()
           << " failed, " << e.poles_skipped << " poles, " << e.constraint_skipped << " constraint-skipped\n";
        for (const auto& f : e.failures) {
            os << "    failure at";
            for (const auto& [k, v] : f.params)
                os << ' ' << k << '=' << with_decimal(v);
            os << "\n      lhs " << with_decimal(f.lhs) << "\n      rhs " << with_decimal(f.rhs) << '\n';
            if (!f.note.empty())
                os << "      " << f.note << '\n';
        }
    }
    os << "total failures: " << report.total_failures() << '\n';
    return os.str();
}

} // namespace hid
