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

#ifndef GKPSIM_SURD_H
#define GKPSIM_SURD_H

#include <optional>
#include <string>

#include "gkpsim/numtheory.h"

namespace gkpsim {

/// An exact real of the form coeff * sqrt(radicand), radicand a positive integer.
///
/// Rotations with rational cotangent u/v have cos = u/sqrt(u^2+v^2) and
/// sin = v/sqrt(u^2+v^2), so Heisenberg coefficients built from such rotations,
/// Fourier/SUM gates and rational squeezes/shears stay in this form as long as
/// every sum combines terms whose radicands differ by a rational square.
class Surd {
   public:
    Surd() : coeff_(0), radicand_(1) {
    }
    Surd(const Rational &value) : coeff_(value), radicand_(1) {
    }
    Surd(long value) : coeff_(value), radicand_(1) {
    }
    Surd(const Rational &coeff, const Integer &radicand);

    const Rational &coeff() const {
        return coeff_;
    }
    const Integer &radicand() const {
        return radicand_;
    }
    bool is_zero() const {
        return coeff_.is_zero();
    }
    int sign() const {
        return coeff_.sign();
    }
    double to_double() const;
    std::string str() const;

    Surd operator-() const {
        return Surd(-coeff_, radicand_);
    }
    Surd operator*(const Surd &other) const;

    /// Exact sum when the radicands are compatible, nullopt otherwise.
    std::optional<Surd> try_add(const Surd &other) const;
    /// Exact quotient this/other when it is rational, nullopt otherwise.
    std::optional<Rational> try_ratio(const Surd &other) const;

    bool operator==(const Surd &other) const;

   private:
    Rational coeff_;
    Integer radicand_;
};

using ExactValue = std::optional<Surd>;

ExactValue exact_add(const ExactValue &a, const ExactValue &b);
ExactValue exact_mul(const ExactValue &a, const ExactValue &b);
ExactValue exact_neg(const ExactValue &a);

}  // namespace gkpsim

#endif
