#pragma once

#include <cstdint>
#include <random>

namespace moderato {

// All randomness in the library flows through one engine type so that a
// conversation is fully reproducible from a single 64-bit seed.
using Rng = std::mt19937_64;

// splitmix64 finalizer. Used to derive well-spread child seeds from
// (base seed, policy, group index) tuples.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace moderato
