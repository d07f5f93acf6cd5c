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

#ifndef GKPSIM_CIRCUIT_H
#define GKPSIM_CIRCUIT_H

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gkpsim/angle.h"
#include "gkpsim/symplectic.h"

namespace gkpsim {

// Mode indices in gates and measurement lists are 1-based.

/// Phase-space rotation: q -> q cos(theta) - p sin(theta), p -> q sin(theta) + p cos(theta).
struct Rotation {
    int mode;
    AngleSpec angle;
};
/// q -> -p, p -> q.
struct Fourier {
    int mode;
};
/// q -> s q, p -> p / s.
struct Squeeze {
    int mode;
    Rational s;
};
/// q -> q, p -> p + sigma q.
struct Shear {
    int mode;
    Rational sigma;
};
/// q_target -> q_control + q_target, p_control -> p_control - p_target.
struct Sum {
    int control;
    int target;
};
/// q -> q + c.
struct DisplaceQ {
    int mode;
    double c;
};
/// p -> p + c.
struct DisplaceP {
    int mode;
    double c;
};

using Gate = std::variant<Rotation, Fourier, Squeeze, Shear, Sum, DisplaceQ, DisplaceP>;

struct Circuit {
    int n = 0;
    std::vector<Gate> gates;
    std::vector<int> measured;
};

/// Throws Error(IndexOutOfRange) or Error(Domain) when the circuit breaks an invariant.
void validate_circuit(const Circuit &circ);

/// Parses the line-oriented circuit format. Throws ParseError.
Circuit parse_circuit(std::string_view text);
/// Inverse of parse_circuit: parse_circuit(render_circuit(c)) reproduces c exactly.
std::string render_circuit(const Circuit &circ);
std::string gate_str(const Gate &gate);
bool operator==(const Gate &lhs, const Gate &rhs);

/// sum_i a_i q_i + b_i p_i + c, plus exact shadows of a and b where known.
struct LinearQuadratureForm {
    std::vector<double> a;
    std::vector<double> b;
    double c = 0.0;
    std::vector<ExactValue> exact_a;
    std::vector<ExactValue> exact_b;

    size_t num_modes() const {
        return a.size();
    }
    /// The form q_mode (1-based mode) on n modes.
    static LinearQuadratureForm position(size_t n, int mode);
    /// A form whose coefficients are taken as exact binary values.
    static LinearQuadratureForm from_values(std::vector<double> a, std::vector<double> b, double c);
    /// Exact -a_i / b_i for every mode where both shadows are known, b_i != 0, and the
    /// ratio is rational; nullopt elsewhere.
    std::vector<std::optional<Rational>> witnesses() const;
};

LinearQuadratureForm apply_gate_adjoint(const LinearQuadratureForm &form, const Gate &gate);
/// U^dagger q_j U for the measured (1-based) mode j. Throws Error(Domain) if j is not measured.
LinearQuadratureForm track_measurement_operator(const Circuit &circ, int j);
SymplecticTransform gate_transform(const Gate &gate, size_t n);
SymplecticTransform circuit_to_symplectic(const Circuit &circ);

}  // namespace gkpsim

#endif
