/*
 * Copyright (c) 2026 nbrecon authors.
 *
 * This file is part of nbrecon.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef NBRECON_RNG_HPP
#define NBRECON_RNG_HPP

#include <cstdint>

namespace nbrecon {

// Splittable counter-based generator (splitmix64). Every stochastic
// component takes one of these explicitly; independent streams are derived
// from a master seed so that results are reproducible no matter how work is
// scheduled across threads.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound) {
        const uint64_t reject = (0 - bound) % bound;
        uint64_t r = next();
        while (r < reject)
            r = next();
        return r % bound;
    }

    // Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Avalanche-mix two words; used to derive child stream seeds.
    static uint64_t mix(uint64_t a, uint64_t b) {
        uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 0x632be59bd9b4e019ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Seed for the stream identified by (a, b) under a master seed.
    static uint64_t derive(uint64_t seed, uint64_t a, uint64_t b = 0) {
        return mix(mix(seed, a), b);
    }

private:
    uint64_t state_;
};

} // namespace nbrecon

#endif
