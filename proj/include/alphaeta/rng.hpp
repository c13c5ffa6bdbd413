// Copyright 2026 The alphaeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALPHAETA_RNG_HPP
#define ALPHAETA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>

#include "alphaeta/angles.hpp"

namespace alphaeta {

/// Finalizer of the SplitMix64 generator; a bijective 64-bit mixer.
constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Small counter-style generator (SplitMix64). Satisfies
/// std::uniform_random_bit_generator.
///
/// The conversions below (uniform01, standard_normal, uniform_below) are
/// defined here rather than taken from <random> distributions so that
/// simulation output is bit-identical across standard library vendors.
class Rng {
   public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed) : state_(seed) {}

    /// Independent stream for one trial of a simulation.
    static Rng for_trial(uint64_t master_seed, uint64_t trial_index) {
        return Rng(mix64(mix64(master_seed ^ 0x6A09E667F3BCC909ULL) + trial_index));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer on [0, n). Rejection sampling, no modulo bias.
    uint64_t uniform_below(uint64_t n) {
        uint64_t limit = max() - max() % n;
        uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % n;
    }

    bool bit() { return ((*this)() >> 63) != 0; }

    /// Standard normal deviate (Box-Muller, one value per call).
    double standard_normal() {
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

    /// Two independent standard normal deviates from one Box-Muller draw.
    void standard_normal_pair(double &a, double &b) {
        double u1 = 1.0 - uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        a = r * std::cos(kTwoPi * u2);
        b = r * std::sin(kTwoPi * u2);
    }

   private:
    uint64_t state_;
};

}  // namespace alphaeta

#endif
