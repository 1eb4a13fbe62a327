#pragma once

#include <cstdint>
#include <string_view>

#include "hid/rational.hpp"

namespace hid {

/// Deterministic stream keyed by (seed, stream name, sample index).
///
/// Counter-based: each key gets an independent SplitMix64 sequence, so the
/// draws for one identity do not depend on which other identities run.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::string_view stream, std::uint64_t index);

    std::uint64_t next();

    /// Uniform integer in [lo, hi] without modulo bias.
    long uniform(long lo, long hi);

    /// numerator uniform in [-height, height], denominator from {1, 2, 3, 5, 7}
    /// restricted to values <= height.
    Rational rational(long height);

private:
    std::uint64_t state_;
};

} // namespace hid
