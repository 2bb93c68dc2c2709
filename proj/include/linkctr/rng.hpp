#pragma once

#include <cstdint>

namespace linkctr {

// splitmix64 finalizer; used for seeding and stream derivation
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent substreams of one master seed. Every stochastic operation in the
// library draws from a stream keyed by (master_seed, kind, index), so results
// never depend on scheduling or on the order realizations are launched in.
enum class StreamKind : std::uint64_t {
    si_realization = 1, // index = seed node of the SI process
    seed_sample = 2,    // seed-set sampling for the heuristic estimator
    sir_run = 3,        // index = run slot in a SIR experiment
    sir_seed_sample = 4,
    shuffle = 5, // random edge ranking
    er_gen = 6,
    sbm_gen = 7,
};

// xoshiro256** (Blackman & Vigna, public domain reference implementation)
class Rng {
public:
    Rng() : Rng(0, StreamKind::si_realization, 0) {}

    Rng(std::uint64_t master_seed, StreamKind kind, std::uint64_t index) {
        std::uint64_t h = mix64(master_seed ^ mix64(static_cast<std::uint64_t>(kind)));
        h = mix64(h + index);
        for (auto& word : state_) {
            h += 0x9e3779b97f4a7c15ULL;
            word = mix64(h);
        }
    }

    std::uint64_t next() {
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

    // uniform double in [0,1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // unbiased uniform integer in [0,n), n >= 1 (rejection sampling)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace linkctr
