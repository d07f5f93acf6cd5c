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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "gkpsim/error.h"

using namespace gkpsim;

namespace {

long mod_pow(long base, long exp, long mod) {
    long result = 1;
    base %= mod;
    if (base < 0) {
        base += mod;
    }
    while (exp > 0) {
        if (exp & 1) {
            result = result * base % mod;
        }
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// Legendre symbol of a modulo an odd prime p via Euler's criterion.
int legendre(long a, long p) {
    long r = mod_pow(a, (p - 1) / 2, p);
    if (r == 0) {
        return 0;
    }
    return r == 1 ? 1 : -1;
}

// Jacobi symbol as the product of Legendre symbols over the factorization of n.
int jacobi_by_factoring(long a, long n) {
    int result = 1;
    long rest = n;
    for (long p = 3; p * p <= rest; p += 2) {
        while (rest % p == 0) {
            result *= legendre(a, p);
            rest /= p;
        }
    }
    if (rest > 1) {
        result *= legendre(a, rest);
    }
    return result;
}

// sum_m exp(2 pi i u m^2 / v) = (u/v) eps_v sqrt(v), eps_v = 1 or i as v = 1 or 3 mod 4.
std::complex<double> gauss_closed_form(long u, long v) {
    double mag = std::sqrt(static_cast<double>(v)) * jacobi_by_factoring(u, v);
    return v % 4 == 1 ? std::complex<double>(mag, 0) : std::complex<double>(0, mag);
}

}  // namespace

TEST(Rational, reduces_and_normalizes_sign) {
    Rational r = reduce_fraction(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(reduce_fraction(0, -7).str(), "0");
    EXPECT_THROW(reduce_fraction(1, 0), Error);
}

TEST(Rational, reduce_is_idempotent) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dist(-100000, 100000);
    for (int k = 0; k < 500; k++) {
        long p = dist(rng);
        long q = dist(rng);
        if (q == 0) {
            continue;
        }
        Rational once = reduce_fraction(p, q);
        Rational twice = reduce_fraction(once.num(), once.den());
        EXPECT_EQ(once, twice);
        EXPECT_EQ(std::gcd(std::labs(p), std::labs(q)) * once.den().get_si(), std::labs(q));
    }
}

TEST(Rational, parse_exact_forms) {
    EXPECT_EQ(Rational::parse("3/6"), reduce_fraction(1, 2));
    EXPECT_EQ(Rational::parse("-2.5e-3"), reduce_fraction(-1, 400));
    EXPECT_EQ(Rational::parse("0.1"), reduce_fraction(1, 10));
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_EQ(Rational::parse("1.5E2"), Rational(150));
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("abc"), Error);
    EXPECT_THROW(Rational::parse(""), Error);
    EXPECT_THROW(Rational::parse("1/"), Error);
}

TEST(Rational, from_double_is_exact) {
    EXPECT_EQ(Rational::from_double(0.5), reduce_fraction(1, 2));
    EXPECT_EQ(Rational::from_double(-3.0), Rational(-3));
    Rational tenth = Rational::from_double(0.1);
    EXPECT_NE(tenth, reduce_fraction(1, 10));
    EXPECT_EQ(tenth.to_double(), 0.1);
}

TEST(Rational, arithmetic) {
    Rational a = reduce_fraction(1, 3);
    Rational b = reduce_fraction(1, 6);
    EXPECT_EQ(a + b, reduce_fraction(1, 2));
    EXPECT_EQ(a - b, b);
    EXPECT_EQ(a * b, reduce_fraction(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_TRUE(b < a);
    EXPECT_EQ((-a).abs(), a);
    EXPECT_THROW(a / Rational(0), Error);
}

TEST(Jacobi, matches_factorization_oracle) {
    for (long n = 1; n < 200; n += 2) {
        for (long a = -60; a < 250; a++) {
            ASSERT_EQ(jacobi_symbol(a, n), jacobi_by_factoring(a, n)) << "a=" << a << " n=" << n;
        }
    }
}

TEST(Jacobi, completely_multiplicative_in_numerator) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(0, 5000);
    for (int k = 0; k < 2000; k++) {
        long a = num(rng);
        long b = num(rng);
        long n = 2 * den(rng) + 1;
        EXPECT_EQ(jacobi_symbol(Integer(a) * Integer(b), n), jacobi_symbol(a, n) * jacobi_symbol(b, n));
    }
}

TEST(Jacobi, rejects_even_or_nonpositive_modulus) {
    EXPECT_THROW(jacobi_symbol(3, 4), Error);
    EXPECT_THROW(jacobi_symbol(3, -3), Error);
    EXPECT_THROW(jacobi_symbol(3, 0), Error);
}

TEST(GaussSum, small_values) {
    GaussSumValue g = gauss_sum(0, 1, 0);
    EXPECT_NEAR(g.value.real(), 1.0, 1e-15);
    EXPECT_NEAR(g.value.imag(), 0.0, 1e-15);
    g = gauss_sum(1, 3, 0);
    EXPECT_NEAR(g.value.real(), 0.0, 1e-12);
    EXPECT_NEAR(g.value.imag(), 1.7320508, 1e-7);
    g = gauss_sum(1, 5, 0);
    EXPECT_NEAR(g.value.real(), 2.2360680, 1e-7);
    EXPECT_NEAR(g.value.imag(), 0.0, 1e-12);
    EXPECT_EQ(g.modulus_v, 5);
    EXPECT_EQ(g.residue_u, 1);
}

TEST(GaussSum, matches_closed_form) {
    for (long v = 1; v < 200; v += 2) {
        for (long u = 0; u < v; u++) {
            if (std::gcd(u, v) != 1) {
                continue;
            }
            std::complex<double> direct = gauss_sum(u, v, 0).value;
            std::complex<double> closed = gauss_closed_form(u, v);
            ASSERT_NEAR(direct.real(), closed.real(), 1e-9) << u << "/" << v;
            ASSERT_NEAR(direct.imag(), closed.imag(), 1e-9) << u << "/" << v;
        }
    }
}

TEST(GaussSum, magnitude_is_sqrt_v_for_every_shift) {
    for (long v = 1; v < 150; v += 2) {
        for (long u = 0; u < v; u++) {
            if (std::gcd(u, v) != 1) {
                continue;
            }
            for (long n = 0; n < v; n++) {
                ASSERT_NEAR(std::abs(gauss_sum(u, v, n).value), std::sqrt(static_cast<double>(v)), 1e-9);
            }
        }
    }
}

TEST(GaussSum, magnitude_up_to_999_sampled) {
    // Beyond v = 149 (covered exhaustively above) each v gets 8 random units u and 4 shifts.
    std::mt19937_64 rng(23);
    for (long v = 151; v <= 999; v += 2) {
        double root = std::sqrt(static_cast<double>(v));
        std::uniform_int_distribution<long> pick(1, v - 1);
        int units = 0;
        while (units < 8) {
            long u = pick(rng);
            if (std::gcd(u, v) != 1) {
                continue;
            }
            units++;
            for (long n : {0L, pick(rng), pick(rng), v - 1}) {
                ASSERT_NEAR(std::abs(gauss_sum(u, v, n).value), root, 1e-9) << u << "/" << v << " n'=" << n;
            }
        }
    }
}

TEST(GaussSum, rejects_bad_moduli) {
    try {
        gauss_sum(1, 4, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedModulus);
    }
    try {
        gauss_sum(3, 9, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
    }
    EXPECT_THROW(gauss_sum(1, -3, 0), Error);
}

TEST(QOdd, construction_examples) {
    EXPECT_EQ(qodd_between(0.3, 0.4), reduce_fraction(11, 31));
    EXPECT_EQ(qodd_between(0.0, 1.0), reduce_fraction(1, 5));
    EXPECT_EQ(qodd_between(-0.4, -0.3), reduce_fraction(-11, 31));
    EXPECT_THROW(qodd_between(1.0, 1.0), Error);
    EXPECT_THROW(qodd_between(2.0, 1.0), Error);
}

TEST(QOdd, agrees_with_linear_search) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> pos(-10.0, 10.0);
    std::uniform_real_distribution<double> width(0.01, 5.0);
    for (int k = 0; k < 200; k++) {
        double x = pos(rng);
        double y = x + width(rng);
        Rational lo = Rational::from_double(x);
        Rational hi = Rational::from_double(y);
        long d = 3;
        while (!(Rational(3) / Rational(d) < hi - lo)) {
            d += 2;
        }
        Rational start = lo * Rational(d);
        Integer a = start.num() / start.den() - 3;
        if (mpz_even_p(a.get_mpz_t())) {
            a -= 1;
        }
        while (!(Rational(a) > lo * Rational(d))) {
            a += 2;
        }
        EXPECT_EQ(qodd_between(x, y), reduce_fraction(a, d)) << x << " " << y;
    }
}

TEST(QOdd, odd_and_strictly_inside) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> pos(-10.0, 10.0);
    for (int k = 0; k < 1000; k++) {
        double x = pos(rng);
        double y = pos(rng);
        if (x > y) {
            std::swap(x, y);
        }
        if (y - x <= 1e-4) {
            continue;
        }
        Rational r = qodd_between(x, y);
        EXPECT_TRUE(mpz_odd_p(r.num().get_mpz_t()));
        EXPECT_TRUE(mpz_odd_p(r.den().get_mpz_t()));
        EXPECT_TRUE(Rational::from_double(x) < r);
        EXPECT_TRUE(r < Rational::from_double(y));
    }
}
