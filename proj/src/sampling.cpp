#include "hid/sampling.hpp"

#include <array>
#include <stdexcept>

namespace hid {

namespace {

constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::array<long, 5> denominators{1, 2, 3, 5, 7};

} // namespace

SampleStream::SampleStream(std::uint64_t seed, std::string_view stream, std::uint64_t index)
    : state_(mix(mix(seed) ^ fnv1a(stream)) ^ mix(index + 0x9e3779b97f4a7c15ULL)) {}

std::uint64_t SampleStream::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
}

long SampleStream::uniform(long lo, long hi) {
    if (hi < lo)
        throw std::invalid_argument("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r = next();
    while (r >= limit)
        r = next();
    return lo + static_cast<long>(r % span);
}

Rational SampleStream::rational(long height) {
    if (height < 1)
        throw std::invalid_argument("rational height bound must be positive");
    std::size_t allowed = 0;
    while (allowed < denominators.size() && denominators[allowed] <= height)
        ++allowed;
    const long num = uniform(-height, height);
    const long den = denominators[static_cast<std::size_t>(uniform(0, static_cast<long>(allowed) - 1))];
    return Rational(num, den);
}

} // namespace hid
