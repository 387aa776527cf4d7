#pragma once

#include <cstdint>

// Counter-based deterministic randomness. Every random decision in the
// project is a pure function of (seed, counter), so results never depend
// on evaluation order or thread count.

namespace hatg::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer (Vigna); bijective on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

// index-th output of the splitmix64 stream seeded with `seed`.
constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGolden);
}

// Uniform double in [0,1) from the top 53 bits.
constexpr double uniform01(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(at(seed, index) >> 11) * 0x1.0p-53;
}

// Sub-stream key, e.g. per-trial or per-restart seeds.
constexpr std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
    return mix64(mix64(master ^ 0xD1B54A32D192ED03ull) + (index + 1) * kGolden);
}

// Canonical index of the unordered pair {u,v}, u < v. Independent of the
// total vertex count, so the same (seed, pair) always sees the same coin.
constexpr std::uint64_t pair_index(std::uint64_t u, std::uint64_t v) {
    return v * (v - 1) / 2 + u;
}

// Small sequential generator for shuffles; one independent state per use.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += kGolden;
        return mix64(state_);
    }
    // Uniform in [0, bound) by rejection-free mapping (bound << 2^64).
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace hatg::rng
