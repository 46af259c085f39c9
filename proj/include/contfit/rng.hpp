#pragma once

#include <cstdint>

namespace contfit {

/// Project-wide random generator: splitmix64 (Vigna, public domain).
///
/// The state advances by a fixed odd increment and the output is a bijective
/// scramble of the counter, so the generator is counter-based and splittable:
/// child streams are derived by drawing a fresh seed from the parent. Equal
/// seed + equal call sequence gives identical output on every platform.
/// The generator identity ("splitmix64") is recorded in run metadata.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n). Modulo reduction; the bias is O(n/2^64) and
    /// negligible at the sizes used here.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    /// Seed for an independent child stream.
    std::uint64_t split() { return next_u64(); }

private:
    std::uint64_t state_;
};

/// Deterministically derives the seed of a numbered sub-stream (grid cells,
/// BO evaluations, per-command seeds) from a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    SplitMix64 g(base ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
    g.next_u64();
    return g.next_u64();
}

inline constexpr const char* kRngName = "splitmix64";

} // namespace contfit
