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

#ifndef GKPSIM_CLASSIFY_H
#define GKPSIM_CLASSIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "gkpsim/angle.h"
#include "gkpsim/circuit.h"
#include "gkpsim/symplectic.h"

namespace gkpsim {

enum class ModeCase { Case1, Case2, ZeroCoefficient, Rejected };
const char *mode_case_name(ModeCase kind);

struct ModeVerdict {
    int mode;  // 1-based
    ModeCase kind;
    Integer u;  // cotangent witness u/v for Case1
    Integer v;
    /// s * Delta for this mode: |b|/v for Case1, 2|a| for Case2, 0 for zero modes.
    double lattice_step;
    std::string reason;  // set for Rejected
};

struct MembershipVerdict {
    bool accepted = false;
    std::vector<ModeVerdict> per_mode;
    std::string reason;
};

/// Single-mode-measurement test on a tracked form: every mode must have b_i = 0,
/// a_i = 0, or -a_i/b_i rational with an odd reduced denominator.
MembershipVerdict rsp_check(const LinearQuadratureForm &form, const ReconstructionPolicy &recon = {});

/// Multimode-measurement test: dsp_decompose plus classification of every angle.
DspOutcome class_b_check(const SymplecticTransform &transform, DspMode mode = DspMode::Permissive,
                         const ReconstructionPolicy &recon = {});

struct ClassBBounds {
    /// Rotation witnesses u/v are drawn with |u| <= max_witness and odd v <= max_witness.
    int max_witness = 9;
    /// Squeeze numerators and denominators are drawn from 1..max_squeeze.
    int max_squeeze = 3;
    /// Number of SUM gates is drawn from 0..max_sums.
    int max_sums = 6;
    int max_shears = 3;
    bool displacements = true;
};

struct GeneratedCircuit {
    Circuit circuit;
    SymplecticTransform transform;
};

/// Random circuit of the form rotations, then squeezes, SUM gates, shears and
/// displacements. Measures every mode. Deterministic in seed.
GeneratedCircuit gen_random_class_b(int n, std::uint64_t seed, const ClassBBounds &bounds = {});

}  // namespace gkpsim

#endif
