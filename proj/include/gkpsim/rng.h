// Copyright 2026 The gkpsim Authors
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

#ifndef GKPSIM_RNG_H
#define GKPSIM_RNG_H

#include <cstdint>

namespace gkpsim {

/// SplitMix64 (Steele, Lea and Flood, 2014): 64-bit state advanced by the golden
/// gamma 0x9E3779B97F4A7C15 and finalized by the variant-13 mixer. Output is
/// identical on every platform.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {
    }

    /// Independent generator for item `index` of a run seeded with `seed`.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next();
    /// Uniform integer in [lo, hi] (inclusive), unbiased by rejection.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    /// Uniform double in [lo, hi) with 53 random bits.
    double uniform_real(double lo, double hi);

   private:
    std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace gkpsim

#endif
