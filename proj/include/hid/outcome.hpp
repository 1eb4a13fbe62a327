#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "hid/rational.hpp"

namespace hid {

/// A vanishing denominator factor encountered during evaluation.
struct Pole {
    std::string factor;
    long index = -1; ///< summation or product index at which it vanished; -1 if none

    [[nodiscard]] std::string describe() const;
    friend bool operator==(const Pole&, const Pole&) = default;
};

/// Thrown inside evaluators; converted to an Outcome at the module boundary.
class PoleError : public std::domain_error {
public:
    explicit PoleError(Pole pole) : std::domain_error(pole.describe()), pole_(std::move(pole)) {}
    [[nodiscard]] const Pole& pole() const noexcept { return pole_; }

private:
    Pole pole_;
};

/// Exactly one of a value or a pole report.
template <class T>
class Outcome {
public:
    Outcome(T value) : state_(std::move(value)) {} // NOLINT(google-explicit-constructor)
    Outcome(Pole pole) : state_(std::move(pole)) {} // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool has_value() const noexcept { return std::holds_alternative<T>(state_); }
    [[nodiscard]] bool is_pole() const noexcept { return !has_value(); }

    [[nodiscard]] const T& value() const {
        if (const auto* v = std::get_if<T>(&state_))
            return *v;
        throw PoleError(std::get<Pole>(state_));
    }
    [[nodiscard]] const Pole& pole() const {
        if (const auto* p = std::get_if<Pole>(&state_))
            return *p;
        throw std::logic_error("outcome holds a value, not a pole");
    }

private:
    std::variant<T, Pole> state_;
};

using EvalOutcome = Outcome<Rational>;

/// Runs `fn`, converting a PoleError into a pole outcome.
template <class Fn>
auto capture_pole(Fn&& fn) -> Outcome<decltype(fn())> {
    try {
        return fn();
    } catch (const PoleError& e) {
        return e.pole();
    }
}

/// Text form of an outcome: the exact rational, or "pole(<factor>@<index>)".
std::string to_text(const EvalOutcome& outcome);

} // namespace hid
