#pragma once

#include <cstdint>

namespace kstab {

// SplitMix64. Used everywhere instead of std distributions so that identical
// seeds give identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0. Rejection sampling to kill modulo bias.
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    bool coin() { return next() & 1u; }

private:
    uint64_t state_;
};

// Counter-based split of a master seed into independent per-instance streams.
inline uint64_t derive_seed(uint64_t master, uint64_t counter) {
    Rng mix(master ^ (0x2545f4914f6cdd1dULL * (counter + 1)));
    mix.next();
    return mix.next();
}

}  // namespace kstab
