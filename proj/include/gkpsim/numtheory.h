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

#ifndef GKPSIM_NUMTHEORY_H
#define GKPSIM_NUMTHEORY_H

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace gkpsim {

using Integer = mpz_class;

/// Exact fraction num/den, always stored reduced with den > 0.
class Rational {
   public:
    Rational() : num_(0), den_(1) {
    }
    Rational(long value) : num_(value), den_(1) {
    }
    Rational(const Integer &value) : num_(value), den_(1) {
    }

    /// Exact value of a finite double (every double is a dyadic rational).
    static Rational from_double(double value);
    /// Parses "p", "p/q" or a decimal literal such as "-2.5e-3", exactly.
    static Rational parse(std::string_view text);

    const Integer &num() const {
        return num_;
    }
    const Integer &den() const {
        return den_;
    }
    bool is_zero() const {
        return num_ == 0;
    }
    bool is_integer() const {
        return den_ == 1;
    }
    int sign() const {
        return sgn(num_);
    }
    double to_double() const;
    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    Rational operator-() const;
    Rational operator+(const Rational &other) const;
    Rational operator-(const Rational &other) const;
    Rational operator*(const Rational &other) const;
    Rational operator/(const Rational &other) const;
    Rational abs() const;

    bool operator==(const Rational &other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    bool operator!=(const Rational &other) const {
        return !(*this == other);
    }
    bool operator<(const Rational &other) const;
    bool operator>(const Rational &other) const {
        return other < *this;
    }
    bool operator<=(const Rational &other) const {
        return !(other < *this);
    }
    bool operator>=(const Rational &other) const {
        return !(*this < other);
    }

   private:
    friend Rational reduce_fraction(const Integer &p, const Integer &q);
    Integer num_;
    Integer den_;
};

std::ostream &operator<<(std::ostream &out, const Rational &value);

/// Returns p/q in lowest terms with a positive denominator.
/// Throws Error(InvalidDenominator) when q == 0.
Rational reduce_fraction(const Integer &p, const Integer &q);

/// Jacobi symbol (a/n) for odd n >= 1, computed with the binary algorithm.
int jacobi_symbol(const Integer &a, const Integer &n);

struct GaussSumValue {
    std::complex<double> value;
    std::int64_t modulus_v;
    std::int64_t residue_u;
    std::int64_t shift_nprime;
};

/// sum_{m=0}^{v-1} exp(2 pi i m^2 u / v) exp(2 pi i m n' / v) by direct O(v) summation.
/// Requires v odd and gcd(u, v) = 1.
GaussSumValue gauss_sum(std::int64_t u, std::int64_t v, std::int64_t nprime);

/// A fraction with odd numerator and odd denominator strictly inside (x, y).
///
/// Picks the smallest natural beta with 3/(2 beta + 1) < y - x, then the smallest
/// integer alpha with 2 alpha + 1 > (2 beta + 1) x, and returns the reduced form of
/// (2 alpha + 1)/(2 beta + 1). All comparisons are exact on the binary values of x, y.
Rational qodd_between(double x, double y);

}  // namespace gkpsim

#endif
