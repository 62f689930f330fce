#pragma once

#include <cstdint>

namespace gqlbench {

// splitmix64 finalizer; the workhorse for all deterministic randomness.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based generator: the state is derived by hashing a key tuple, so a
// stream keyed by (seed, entity kind, entity index) yields identical draws no
// matter what else has been generated. Draws within a stream are sequential
// splitmix64 steps. Not standard-library <random> because we need bit-exact
// output across platforms.
class Rng {
public:
    static Rng keyed(std::uint64_t seed, std::uint64_t a,
                     std::uint64_t b = 0, std::uint64_t c = 0) {
        Rng r;
        r.state_ = mix64(mix64(mix64(mix64(seed) ^ a) ^ b) ^ c);
        return r;
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Unbiased-enough bounded draw via 128-bit multiply.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_ = 0;
};

}  // namespace gqlbench
