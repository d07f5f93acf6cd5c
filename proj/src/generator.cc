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

#include "gkpsim/classify.h"
#include "gkpsim/error.h"
#include "gkpsim/rng.h"

namespace gkpsim {

namespace {

AngleSpec random_angle(SplitMix64 &rng, int max_witness) {
    if (rng.uniform_int(0, 5) == 0) {
        return PiMultiple{rng.uniform_int(-1, 2)};
    }
    std::int64_t v = 2 * rng.uniform_int(0, (max_witness - 1) / 2) + 1;
    std::int64_t u = rng.uniform_int(-max_witness, max_witness);
    return CotRational{reduce_fraction(Integer(static_cast<long>(u)), Integer(static_cast<long>(v)))};
}

int random_mode(SplitMix64 &rng, int n) {
    return static_cast<int>(rng.uniform_int(1, n));
}

}  // namespace

GeneratedCircuit gen_random_class_b(int n, std::uint64_t seed, const ClassBBounds &bounds) {
    if (n < 1) {
        throw Error(ErrorCode::Domain, "gen_random_class_b needs n >= 1");
    }
    if (bounds.max_witness < 1 || bounds.max_squeeze < 1) {
        throw Error(ErrorCode::Domain, "generator bounds must be positive");
    }
    SplitMix64 rng = SplitMix64::stream(seed, 0);
    Circuit circ;
    circ.n = n;
    for (int j = 1; j <= n; j++) {
        circ.gates.push_back(Rotation{j, random_angle(rng, bounds.max_witness)});
    }
    for (int j = 1; j <= n; j++) {
        if (rng.uniform_int(0, 1) == 1) {
            std::int64_t p = rng.uniform_int(1, bounds.max_squeeze);
            std::int64_t q = rng.uniform_int(1, bounds.max_squeeze);
            long sign = rng.uniform_int(0, 1) == 1 ? -1 : 1;
            circ.gates.push_back(Squeeze{j, reduce_fraction(Integer(sign * p), Integer(static_cast<long>(q)))});
        }
    }
    if (n >= 2) {
        std::int64_t sums = rng.uniform_int(0, bounds.max_sums);
        for (std::int64_t k = 0; k < sums; k++) {
            int control = random_mode(rng, n);
            int target = random_mode(rng, n - 1);
            if (target >= control) {
                target++;
            }
            circ.gates.push_back(Sum{control, target});
        }
    }
    std::int64_t shears = rng.uniform_int(0, bounds.max_shears);
    for (std::int64_t k = 0; k < shears; k++) {
        circ.gates.push_back(Shear{random_mode(rng, n), reduce_fraction(Integer(static_cast<long>(rng.uniform_int(-4, 4))), 2)});
    }
    if (bounds.displacements) {
        for (int j = 1; j <= n; j++) {
            switch (rng.uniform_int(0, 2)) {
                case 1:
                    circ.gates.push_back(DisplaceQ{j, rng.uniform_real(-2.0, 2.0)});
                    break;
                case 2:
                    circ.gates.push_back(DisplaceP{j, rng.uniform_real(-2.0, 2.0)});
                    break;
                default:
                    break;
            }
        }
    }
    for (int j = 1; j <= n; j++) {
        circ.measured.push_back(j);
    }
    SymplecticTransform transform = circuit_to_symplectic(circ);
    return GeneratedCircuit{std::move(circ), std::move(transform)};
}

}  // namespace gkpsim
