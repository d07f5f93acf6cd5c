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

#ifndef GKPSIM_ANGLE_H
#define GKPSIM_ANGLE_H

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "gkpsim/numtheory.h"
#include "gkpsim/surd.h"

namespace gkpsim {

/// Rotation angle with cot(theta) = cot exactly; theta lies in (0, pi).
struct CotRational {
    Rational cot;
};
/// theta = k * pi.
struct PiMultiple {
    std::int64_t k;
};
/// A floating-point angle; membership in the simulatable set needs reconstruction.
struct Radians {
    double value;
};

using AngleSpec = std::variant<CotRational, PiMultiple, Radians>;

double angle_radians(const AngleSpec &angle);
double angle_cos(const AngleSpec &angle);
double angle_sin(const AngleSpec &angle);
/// Exact cos/sin when the angle is symbolic, nullopt for Radians.
ExactValue angle_cos_exact(const AngleSpec &angle);
ExactValue angle_sin_exact(const AngleSpec &angle);
/// "cot u/v", "pi k" or "rad x" (the circuit-format spelling).
std::string angle_str(const AngleSpec &angle);
bool operator==(const AngleSpec &lhs, const AngleSpec &rhs);

/// cot(theta) = u/v in lowest terms with v odd.
struct Case1 {
    Integer u;
    Integer v;
};
/// theta = k * pi.
struct Case2 {};
struct NotInTheta {
    std::string reason;
};

using ThetaClass = std::variant<Case1, Case2, NotInTheta>;

bool in_theta(const ThetaClass &cls);
std::string theta_class_str(const ThetaClass &cls);

/// How floating-point data may be mapped back onto exact cotangents.
struct ReconstructionPolicy {
    std::int64_t max_den = 1000000;
    double tol = 1e-9;
    /// Float angles and inexact coefficients are rejected unless this is set.
    bool allow_float = false;
};

/// Continued-fraction convergent p/q of x with the smallest q <= max_den such that
/// |x - p/q| <= tol, or nullopt when none exists.
std::optional<Rational> reconstruct_rational(double x, std::int64_t max_den, double tol);

ThetaClass classify_cot(const Rational &cot);
ThetaClass classify_angle(const AngleSpec &angle, const ReconstructionPolicy &recon = {});

/// Comb spacing parameter: |sin theta|/v = 1/sqrt(u^2+v^2) for Case1, 2 for Case2.
/// Throws Error(NotSimulatable) for NotInTheta.
double peak_spacing(const ThetaClass &cls);

}  // namespace gkpsim

#endif
