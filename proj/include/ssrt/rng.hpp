// Seedable, splittable 64-bit PRNG (xoshiro256++) with hand-rolled variate
// transforms so that streams are bit-reproducible across platforms and
// standard-library versions.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace ssrt {

namespace detail {

// splitmix64 finalizer; used for seeding and for deriving child streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& s : state_) s = detail::splitmix64(sm);
    }

    // Independent child stream; (seed, stream) pairs map to distinct,
    // well-separated xoshiro states via double splitmix hashing.
    [[nodiscard]] Rng split(std::uint64_t stream) const {
        std::uint64_t h = stream;
        h = detail::splitmix64(h);
        std::uint64_t mixed = seed_ ^ h;
        return Rng(detail::splitmix64(mixed));
    }

    std::uint64_t seed() const { return seed_; }

    // xoshiro256++ core.
    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    // Uniform on the open interval (0,1); never returns an endpoint, so
    // log/inverse transforms are safe without branching.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t uniform_int(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Box-Muller, sine branch discarded: one normal per two uniforms keeps the
    // stream position deterministic regardless of call pattern.
    double normal() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    // Exponential with mean `scale`.
    double exponential(double scale) { return -scale * std::log(uniform01()); }

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
};

} // namespace ssrt
