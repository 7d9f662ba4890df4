// SPDX-License-Identifier: Apache-2.0
//
// scatterlab -- Rician K-factor laboratory for random scattering environments
// Copyright (C) 2026 the scatterlab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>

namespace scatterlab {

/// Counter-seeded xoshiro256** stream.
///
/// One (seed, stream_id) pair identifies one statistically independent
/// stream; identical pairs reproduce identical draws bit-for-bit on every
/// platform and for any number of worker threads.  Ensemble simulations
/// assign one stream per ensemble index so that parallel scheduling cannot
/// change results.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {
        // SplitMix64 over a seed/stream mix fills the engine state.
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (stream_id + 0x632BE59BD9B4E019ULL));
        for (auto &word : state_)
            word = splitmix64(x);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

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

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    static std::uint64_t splitmix64(std::uint64_t &x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4];
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

namespace rng_domain {

// High bits of stream_id namespace the consumers so that the Monte-Carlo
// voltage model and the MoM ensembles never share a stream.
inline constexpr std::uint64_t monte_carlo = 0x4D43ULL << 48; // "MC"
inline constexpr std::uint64_t mom = 0x4D4DULL << 48;         // "MM"

inline std::uint64_t stream_for(std::uint64_t domain, std::uint64_t frequency_index,
                                std::uint64_t ensemble_index) {
    return domain | (frequency_index << 32) | ensemble_index;
}

} // namespace rng_domain

} // namespace scatterlab
