#pragma once

#include <cstdint>

namespace cliquelab {

// Seed for one random stream. Streams for trial i are derived from the
// master seed by mixing, so parallel trials draw from disjoint sequences
// regardless of scheduling.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

// splitmix64 finalizer (Vigna); used both to mix stream ids and to seed
// the generator state.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Seed derive(Seed base, std::uint64_t index) {
    return Seed{base.master, mix64(base.stream ^ (0x5851f42d4c957f2dULL * (index + 1)))};
}

// xoshiro256** with splitmix64 state expansion. Self-contained so output
// is identical on every platform and compiler.
class Rng {
public:
    explicit Rng(Seed s) {
        std::uint64_t z = s.master ^ mix64(s.stream);
        for (auto& w : state_) {
            z = mix64(z);
            w = z;
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bool() { return (next_u64() >> 63) != 0; }

    // uniform in [0, bound) without modulo bias (Lemire rejection)
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t t = (0 - bound) % bound;
            while (lo < t) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

}  // namespace cliquelab
