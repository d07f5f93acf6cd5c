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

#include "gkpsim/numtheory.h"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>

#include "gkpsim/error.h"

namespace gkpsim {

namespace {

Integer floor_of(const Rational &r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return out;
}

// Smallest odd integer strictly greater than t.
Integer odd_above(const Rational &t) {
    Integer k = floor_of(t) + 1;
    if (mpz_even_p(k.get_mpz_t())) {
        k += 1;
    }
    return k;
}

Integer parse_integer(std::string_view text) {
    if (text.empty()) {
        throw Error(ErrorCode::Domain, "empty integer literal");
    }
    size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) {
        throw Error(ErrorCode::Domain, "malformed integer literal '" + std::string(text) + "'");
    }
    for (size_t i = start; i < text.size(); i++) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw Error(ErrorCode::Domain, "malformed integer literal '" + std::string(text) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

}  // namespace

Rational reduce_fraction(const Integer &p, const Integer &q) {
    if (q == 0) {
        throw Error(ErrorCode::InvalidDenominator, "denominator must be nonzero");
    }
    Rational out;
    Integer g = gcd(p, q);
    out.num_ = p / g;
    out.den_ = q / g;
    if (out.den_ < 0) {
        out.num_ = -out.num_;
        out.den_ = -out.den_;
    }
    return out;
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::Domain, "cannot represent a non-finite value as a fraction");
    }
    mpq_class q(value);
    q.canonicalize();
    return reduce_fraction(q.get_num(), q.get_den());
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        return reduce_fraction(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }

    // Decimal literal: [sign] digits [. digits] [(e|E) [sign] digits]
    std::string mantissa;
    size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        i++;
    }
    long fraction_digits = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < text.size(); i++) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa.push_back(c);
            seen_digit = true;
            if (seen_point) {
                fraction_digits++;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) {
        throw Error(ErrorCode::Domain, "malformed number '" + std::string(text) + "'");
    }
    long exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::string_view exp_text = text.substr(i + 1);
        Integer e = parse_integer(exp_text);
        if (!e.fits_slong_p() || e > 100000 || e < -100000) {
            throw Error(ErrorCode::Domain, "exponent out of range in '" + std::string(text) + "'");
        }
        exponent = e.get_si();
        i = text.size();
    }
    if (i != text.size()) {
        throw Error(ErrorCode::Domain, "malformed number '" + std::string(text) + "'");
    }
    Integer num(mantissa, 10);
    if (negative) {
        num = -num;
    }
    long scale = exponent - fraction_digits;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
    if (scale >= 0) {
        return reduce_fraction(num * power, 1);
    }
    return reduce_fraction(num, power);
}

double Rational::to_double() const {
    return mpq_class(num_, den_).get_d();
}

std::string Rational::str() const {
    if (den_ == 1) {
        return num_.get_str();
    }
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational Rational::operator+(const Rational &other) const {
    return reduce_fraction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Rational Rational::operator-(const Rational &other) const {
    return *this + (-other);
}

Rational Rational::operator*(const Rational &other) const {
    return reduce_fraction(num_ * other.num_, den_ * other.den_);
}

Rational Rational::operator/(const Rational &other) const {
    if (other.is_zero()) {
        throw Error(ErrorCode::InvalidDenominator, "division by zero");
    }
    return reduce_fraction(num_ * other.den_, den_ * other.num_);
}

Rational Rational::abs() const {
    return num_ < 0 ? -*this : *this;
}

bool Rational::operator<(const Rational &other) const {
    return num_ * other.den_ < other.num_ * den_;
}

std::ostream &operator<<(std::ostream &out, const Rational &value) {
    return out << value.str();
}

int jacobi_symbol(const Integer &a_in, const Integer &n_in) {
    if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t())) {
        throw Error(ErrorCode::Domain, "jacobi symbol needs a positive odd modulus, got " + n_in.get_str());
    }
    Integer n = n_in;
    Integer a;
    mpz_fdiv_r(a.get_mpz_t(), a_in.get_mpz_t(), n.get_mpz_t());
    int result = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) {
            result = -result;
        }
        mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    }
    return n == 1 ? result : 0;
}

GaussSumValue gauss_sum(std::int64_t u, std::int64_t v, std::int64_t nprime) {
    if (v <= 0 || v % 2 == 0) {
        throw Error(ErrorCode::UnsupportedModulus, "gauss sum modulus must be a positive odd integer, got " +
                                                       std::to_string(v));
    }
    if (std::gcd(u, v) != 1) {
        throw Error(ErrorCode::NotCoprime, "gauss sum needs gcd(u, v) = 1; reduce " + std::to_string(u) + "/" +
                                               std::to_string(v) + " first");
    }
    auto mod = [v](__int128 x) {
        __int128 r = x % v;
        return static_cast<std::int64_t>(r < 0 ? r + v : r);
    };
    const std::int64_t ur = mod(u);
    const std::int64_t nr = mod(nprime);
    const double step = 2 * std::numbers::pi / static_cast<double>(v);
    std::complex<double> total = 0;
    for (std::int64_t m = 0; m < v; m++) {
        __int128 mm = m;
        std::int64_t k = mod(mm * mm % v * ur + mm * nr);
        total += std::polar(1.0, step * static_cast<double>(k));
    }
    return GaussSumValue{total, v, u, nprime};
}

Rational qodd_between(double x, double y) {
    if (!(x < y)) {
        throw Error(ErrorCode::EmptyInterval, "qodd_between needs x < y");
    }
    Rational lo = Rational::from_double(x);
    Rational hi = Rational::from_double(y);
    Integer denom = odd_above(Rational(3) / (hi - lo));
    if (denom < 3) {
        denom = 3;
    }
    Integer numer = odd_above(lo * Rational(denom));
    return reduce_fraction(numer, denom);
}

}  // namespace gkpsim
