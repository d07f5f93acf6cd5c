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

#include "gkpsim/surd.h"

#include <cmath>

#include "gkpsim/error.h"

namespace gkpsim {

namespace {

bool is_square(const Integer &x) {
    return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

Integer isqrt(const Integer &x) {
    Integer out;
    mpz_sqrt(out.get_mpz_t(), x.get_mpz_t());
    return out;
}

}  // namespace

Surd::Surd(const Rational &coeff, const Integer &radicand) : coeff_(coeff), radicand_(radicand) {
    if (radicand_ <= 0) {
        throw Error(ErrorCode::Domain, "surd radicand must be positive");
    }
    if (coeff_.is_zero()) {
        radicand_ = 1;
    } else if (radicand_ != 1 && is_square(radicand_)) {
        coeff_ = coeff_ * Rational(isqrt(radicand_));
        radicand_ = 1;
    }
}

double Surd::to_double() const {
    return coeff_.to_double() * std::sqrt(radicand_.get_d());
}

std::string Surd::str() const {
    if (radicand_ == 1) {
        return coeff_.str();
    }
    return coeff_.str() + "*sqrt(" + radicand_.get_str() + ")";
}

Surd Surd::operator*(const Surd &other) const {
    Integer g = gcd(radicand_, other.radicand_);
    Integer rad = (radicand_ / g) * (other.radicand_ / g);
    return Surd(coeff_ * other.coeff_ * Rational(g), rad);
}

std::optional<Surd> Surd::try_add(const Surd &other) const {
    if (is_zero()) {
        return other;
    }
    if (other.is_zero()) {
        return *this;
    }
    if (radicand_ == other.radicand_) {
        return Surd(coeff_ + other.coeff_, radicand_);
    }
    Integer prod = radicand_ * other.radicand_;
    if (!is_square(prod)) {
        return std::nullopt;
    }
    // sqrt(d2) = sqrt(d1 d2) / d1 * sqrt(d1)
    Rational scale = reduce_fraction(isqrt(prod), radicand_);
    return Surd(coeff_ + other.coeff_ * scale, radicand_);
}

std::optional<Rational> Surd::try_ratio(const Surd &other) const {
    if (other.is_zero()) {
        throw Error(ErrorCode::InvalidDenominator, "surd ratio with zero denominator");
    }
    if (is_zero()) {
        return Rational(0);
    }
    Integer prod = radicand_ * other.radicand_;
    if (!is_square(prod)) {
        return std::nullopt;
    }
    return coeff_ / other.coeff_ * reduce_fraction(isqrt(prod), other.radicand_);
}

bool Surd::operator==(const Surd &other) const {
    if (is_zero() || other.is_zero()) {
        return is_zero() && other.is_zero();
    }
    auto r = try_ratio(other);
    return r.has_value() && *r == Rational(1);
}

ExactValue exact_add(const ExactValue &a, const ExactValue &b) {
    if (!a || !b) {
        return std::nullopt;
    }
    return a->try_add(*b);
}

ExactValue exact_mul(const ExactValue &a, const ExactValue &b) {
    // An exact zero annihilates an inexact factor.
    if ((a && a->is_zero()) || (b && b->is_zero())) {
        return Surd();
    }
    if (!a || !b) {
        return std::nullopt;
    }
    return *a * *b;
}

ExactValue exact_neg(const ExactValue &a) {
    if (!a) {
        return std::nullopt;
    }
    return -*a;
}

}  // namespace gkpsim
