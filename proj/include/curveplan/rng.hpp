#pragma once

// Portable seeded randomness. std::mt19937_64 has a standardized output
// sequence, but the std distributions do not, so the uniform mappings below
// are written out explicitly. Trials derive private child seeds with a
// SplitMix64 finalizer so each (base seed, stream, index) triple is
// independently re-runnable.

#include <cstdint>
#include <random>
#include <string_view>

namespace curveplan {

/// Identifier recorded in every report. Bump the suffix if any mapping changes.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64+splitmix64-derive+u53/v1";

struct RngSeed {
    std::uint64_t value = 0;

    friend constexpr bool operator==(const RngSeed&, const RngSeed&) = default;
};

[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Child seed for trial `index` of stream `stream` under `base`.
[[nodiscard]] constexpr RngSeed derive_seed(RngSeed base, std::uint64_t stream,
                                            std::uint64_t index) noexcept {
    std::uint64_t h = splitmix64(base.value);
    h = splitmix64(h ^ stream);
    h = splitmix64(h ^ index);
    return RngSeed{h};
}

class Rng {
public:
    explicit Rng(RngSeed seed) : engine_(seed.value) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        const auto wide = static_cast<unsigned __int128>(engine_()) * n;
        return static_cast<std::size_t>(wide >> 64);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace curveplan
