#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace zdense {

/// The random stream threaded through every sampling routine.
using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent child stream number `index` of a master seed.
inline Rng derive_stream(std::uint64_t seed, std::uint64_t index)
{
    return Rng(splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

/// Uniform integer in [0, bound). Rejection sampling on the raw 64-bit
/// output, so results do not depend on the standard library's distributions.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    if (bound <= 1)
        return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
        - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

} // namespace zdense
