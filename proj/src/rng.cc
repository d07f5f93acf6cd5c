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

#include "gkpsim/rng.h"

#include "gkpsim/error.h"

namespace gkpsim {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed) ^ mix64(index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw Error(ErrorCode::Domain, "uniform_int needs lo <= hi");
    }
    std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0) {
        return static_cast<std::int64_t>(next());
    }
    // Largest multiple of range representable in 64 bits.
    std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
    std::uint64_t x;
    do {
        x = next();
    } while (x > limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

double SplitMix64::uniform_real(double lo, double hi) {
    double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

}  // namespace gkpsim
