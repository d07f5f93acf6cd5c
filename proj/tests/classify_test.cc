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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gkpsim/error.h"
#include "test_util.h"

using namespace gkpsim;

TEST(Surd, normalizes_and_multiplies) {
    EXPECT_EQ(Surd(Rational(3), 4).radicand(), 1);
    EXPECT_EQ(Surd(Rational(3), 4).coeff(), Rational(6));
    EXPECT_EQ(Surd(Rational(0), 7).radicand(), 1);
    Surd root2(Rational(1), 2);
    EXPECT_EQ(root2 * root2, Surd(2));
    Surd product = Surd(Rational(1), 6) * Surd(Rational(1), 10);
    EXPECT_NEAR(product.to_double(), std::sqrt(60.0), 1e-12);
    EXPECT_THROW(Surd(Rational(1), 0), Error);
}

TEST(Surd, sums_and_ratios) {
    Surd a(Rational(1), 2);
    Surd b(Rational(3), 8);
    auto sum = a.try_add(b);
    ASSERT_TRUE(sum.has_value());
    EXPECT_NEAR(sum->to_double(), 7 * std::sqrt(2.0), 1e-12);
    EXPECT_FALSE(a.try_add(Surd(Rational(1), 3)).has_value());
    EXPECT_EQ(*b.try_ratio(a), Rational(6));
    EXPECT_FALSE(a.try_ratio(Surd(1)).has_value());
    EXPECT_THROW(a.try_ratio(Surd()), Error);
    EXPECT_EQ(Surd(Rational(2), 2), Surd(Rational(1), 8));
}

TEST(Surd, optional_helpers) {
    ExactValue unknown;
    EXPECT_FALSE(exact_add(unknown, Surd(1)).has_value());
    EXPECT_TRUE(exact_mul(unknown, Surd()).has_value());
    EXPECT_TRUE(exact_mul(unknown, Surd())->is_zero());
    EXPECT_FALSE(exact_mul(unknown, Surd(2)).has_value());
    EXPECT_EQ(*exact_neg(Surd(3)), Surd(-3));
}

TEST(Angle, classification_examples) {
    ThetaClass c = classify_angle(CotRational{Rational(0)});
    ASSERT_TRUE(std::holds_alternative<Case1>(c));
    EXPECT_EQ(std::get<Case1>(c).u, 0);
    EXPECT_EQ(std::get<Case1>(c).v, 1);
    EXPECT_TRUE(std::holds_alternative<Case2>(classify_angle(PiMultiple{1})));
    ThetaClass bad = classify_angle(CotRational{reduce_fraction(-1, 2)});
    ASSERT_TRUE(std::holds_alternative<NotInTheta>(bad));
    EXPECT_EQ(std::get<NotInTheta>(bad).reason, "even denominator");
}

TEST(Angle, peak_spacing_values) {
    EXPECT_DOUBLE_EQ(peak_spacing(Case1{0, 1}), 1.0);
    EXPECT_DOUBLE_EQ(peak_spacing(Case2{}), 2.0);
    EXPECT_NEAR(peak_spacing(Case1{1, 1}), std::sin(std::numbers::pi / 4), 1e-15);
    EXPECT_NEAR(peak_spacing(Case1{1, 1}), 0.7071068, 1e-7);
    // |sin(theta)| / v with cot(theta) = u / v.
    for (long u = -7; u <= 7; u++) {
        for (long v = 1; v <= 9; v += 2) {
            double theta = std::atan2(static_cast<double>(v), static_cast<double>(u));
            EXPECT_NEAR(peak_spacing(Case1{u, v}), std::fabs(std::sin(theta)) / v, 1e-15);
        }
    }
    try {
        peak_spacing(NotInTheta{"even denominator"});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSimulatable);
    }
}

TEST(Angle, reduction_invariance) {
    for (long u = -6; u <= 6; u++) {
        for (long v = 1; v <= 8; v++) {
            for (long w : {-3L, 2L, 5L}) {
                ThetaClass base = classify_angle(CotRational{reduce_fraction(u, v)});
                ThetaClass scaled = classify_angle(CotRational{reduce_fraction(u * w, v * w)});
                EXPECT_EQ(theta_class_str(base), theta_class_str(scaled));
            }
        }
    }
}

TEST(Angle, exact_trig_matches_floats) {
    for (AngleSpec a : {AngleSpec{CotRational{reduce_fraction(2, 3)}}, AngleSpec{CotRational{reduce_fraction(-5, 7)}},
                        AngleSpec{PiMultiple{3}}, AngleSpec{PiMultiple{-2}}}) {
        double theta = angle_radians(a);
        EXPECT_NEAR(angle_cos(a), std::cos(theta), 1e-15);
        EXPECT_NEAR(angle_sin(a), std::sin(theta), 1e-15);
        EXPECT_NEAR(angle_cos_exact(a)->to_double(), std::cos(theta), 1e-15);
        EXPECT_NEAR(angle_sin_exact(a)->to_double(), std::sin(theta), 1e-15);
    }
    EXPECT_FALSE(angle_cos_exact(Radians{0.1}).has_value());
}

TEST(Angle, float_reconstruction_needs_opt_in) {
    double theta = std::atan2(3.0, 2.0);
    EXPECT_TRUE(std::holds_alternative<NotInTheta>(classify_angle(Radians{theta})));
    ReconstructionPolicy recon;
    recon.allow_float = true;
    ThetaClass c = classify_angle(Radians{theta}, recon);
    ASSERT_TRUE(std::holds_alternative<Case1>(c));
    EXPECT_EQ(std::get<Case1>(c).u, 2);
    EXPECT_EQ(std::get<Case1>(c).v, 3);
    EXPECT_TRUE(std::holds_alternative<Case2>(classify_angle(Radians{std::numbers::pi}, recon)));
    EXPECT_TRUE(std::holds_alternative<Case2>(classify_angle(Radians{-2 * std::numbers::pi}, recon)));
    EXPECT_TRUE(std::holds_alternative<NotInTheta>(classify_angle(Radians{1.0}, recon)));
}

TEST(Angle, reconstruction_is_sound) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> dist(0.01, 3.13);
    std::uniform_int_distribution<long> small(-30, 30);
    std::uniform_int_distribution<long> positive(1, 30);
    ReconstructionPolicy recon;
    recon.allow_float = true;
    for (int k = 0; k < 2000; k++) {
        double x = k % 2 == 0 ? dist(rng) : std::atan2(static_cast<double>(positive(rng)), static_cast<double>(small(rng)));
        ThetaClass c = classify_angle(Radians{x}, recon);
        if (const Case1 *c1 = std::get_if<Case1>(&c)) {
            double cot = std::cos(x) / std::sin(x);
            EXPECT_LE(std::fabs(cot - c1->u.get_d() / c1->v.get_d()), recon.tol);
        }
    }
}

TEST(Angle, continued_fraction_smallest_denominator) {
    EXPECT_EQ(*reconstruct_rational(0.5, 100, 1e-12), reduce_fraction(1, 2));
    EXPECT_EQ(*reconstruct_rational(-1.0 / 3.0, 100, 1e-12), reduce_fraction(-1, 3));
    EXPECT_EQ(*reconstruct_rational(355.0 / 113.0, 1000, 1e-12), reduce_fraction(355, 113));
    EXPECT_FALSE(reconstruct_rational(std::numbers::pi, 100, 1e-12).has_value());
    EXPECT_EQ(*reconstruct_rational(std::numbers::pi, 100, 1e-2), reduce_fraction(22, 7));
}

TEST(Rsp, double_shear_conjugate_rejected) {
    Circuit c = parse_circuit("modes 1\nF 1\nP 1 1\nP 1 1\nF 1\nMEASURE 1");
    LinearQuadratureForm f = track_measurement_operator(c, 1);
    EXPECT_DOUBLE_EQ(f.a[0], -1.0);
    EXPECT_DOUBLE_EQ(f.b[0], 2.0);
    MembershipVerdict v = rsp_check(f);
    EXPECT_FALSE(v.accepted);
    EXPECT_NE(v.reason.find("even denominator"), std::string::npos);
    EXPECT_EQ(v.per_mode[0].kind, ModeCase::Rejected);
}

TEST(Rsp, identity_and_two_mode_examples) {
    MembershipVerdict id = rsp_check(LinearQuadratureForm::position(2, 1));
    EXPECT_TRUE(id.accepted);
    EXPECT_EQ(id.per_mode[0].kind, ModeCase::Case2);
    EXPECT_EQ(id.per_mode[1].kind, ModeCase::ZeroCoefficient);
    EXPECT_DOUBLE_EQ(id.per_mode[0].lattice_step, 2.0);

    Circuit c = parse_circuit("modes 2\nF 2\nSUM 2 1\nMEASURE 1");
    MembershipVerdict v = rsp_check(track_measurement_operator(c, 1));
    ASSERT_TRUE(v.accepted);
    EXPECT_EQ(v.per_mode[0].kind, ModeCase::Case2);
    EXPECT_EQ(v.per_mode[1].kind, ModeCase::Case1);
    EXPECT_EQ(v.per_mode[1].u, 0);
    EXPECT_EQ(v.per_mode[1].v, 1);
    EXPECT_DOUBLE_EQ(v.per_mode[0].lattice_step, 2.0);
    EXPECT_DOUBLE_EQ(v.per_mode[1].lattice_step, 1.0);
}

TEST(Rsp, hand_written_forms_use_binary_values) {
    MembershipVerdict v = rsp_check(LinearQuadratureForm::from_values({-1.0}, {3.0}, 0.0));
    ASSERT_TRUE(v.accepted);
    EXPECT_EQ(v.per_mode[0].u, 1);
    EXPECT_EQ(v.per_mode[0].v, 3);
    // 0.1 is not 1/10 in binary, and its reduced denominator is even.
    EXPECT_FALSE(rsp_check(LinearQuadratureForm::from_values({0.1}, {1.0}, 0.0)).accepted);
}

TEST(Rsp, inexact_modes_need_opt_in) {
    Circuit c = parse_circuit("modes 1\nR 1 rad 0.98279372324732905\nMEASURE 1");
    LinearQuadratureForm f = track_measurement_operator(c, 1);
    MembershipVerdict strict = rsp_check(f);
    EXPECT_FALSE(strict.accepted);
    EXPECT_NE(strict.reason.find("reconstruction not enabled"), std::string::npos);
    ReconstructionPolicy recon;
    recon.allow_float = true;
    MembershipVerdict relaxed = rsp_check(f, recon);
    ASSERT_TRUE(relaxed.accepted);
    EXPECT_EQ(relaxed.per_mode[0].u, 2);
    EXPECT_EQ(relaxed.per_mode[0].v, 3);
}

TEST(Rsp, spacing_identity) {
    // s * Delta with s = |(a, b)| and Delta = sin(theta) / v equals |b| / v; Case2 gives 2|a|.
    for (std::uint64_t seed = 0; seed < 100; seed++) {
        GeneratedCircuit g = gen_random_class_b(1 + static_cast<int>(seed % 4), seed);
        for (int j : g.circuit.measured) {
            LinearQuadratureForm f = track_measurement_operator(g.circuit, j);
            MembershipVerdict v = rsp_check(f);
            ASSERT_TRUE(v.accepted);
            for (size_t i = 0; i < f.num_modes(); i++) {
                const ModeVerdict &mv = v.per_mode[i];
                if (mv.kind == ModeCase::Case1) {
                    double s = std::hypot(f.a[i], f.b[i]);
                    double sin_theta = std::fabs(f.b[i]) / s;
                    EXPECT_NEAR(mv.lattice_step, s * sin_theta / mv.v.get_d(), 1e-12);
                } else if (mv.kind == ModeCase::Case2) {
                    EXPECT_NEAR(mv.lattice_step, 2 * std::fabs(f.a[i]), 1e-12);
                }
            }
        }
    }
}

TEST(ClassB, examples) {
    Circuit c = parse_circuit("modes 2\nF 1\nSUM 1 2\nMEASURE 1 2");
    DspOutcome out = class_b_check(circuit_to_symplectic(c));
    ASSERT_TRUE(out.accepted());
    EXPECT_EQ(theta_class_str(out.decomposition->classes[0]), "case1(0/1)");
    EXPECT_EQ(theta_class_str(out.decomposition->classes[1]), "case2");
    DspOutcome id = class_b_check(SymplecticTransform::identity(3));
    ASSERT_TRUE(id.accepted());
    for (const ThetaClass &cls : id.decomposition->classes) {
        EXPECT_TRUE(std::holds_alternative<Case2>(cls));
    }
}

TEST(Generator, deterministic_and_in_class_b) {
    GeneratedCircuit a = gen_random_class_b(2, 99);
    GeneratedCircuit b = gen_random_class_b(2, 99);
    EXPECT_EQ(render_circuit(a.circuit), render_circuit(b.circuit));
    EXPECT_TRUE(class_b_check(a.transform).accepted());
    GeneratedCircuit c = gen_random_class_b(2, 100);
    EXPECT_NE(render_circuit(a.circuit), render_circuit(c.circuit));

    ClassBBounds rotations_only;
    rotations_only.max_sums = 0;
    rotations_only.max_shears = 0;
    rotations_only.max_squeeze = 1;
    rotations_only.displacements = false;
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        GeneratedCircuit g = gen_random_class_b(1, seed, rotations_only);
        EXPECT_TRUE(class_b_check(g.transform).accepted()) << render_circuit(g.circuit);
    }
}

TEST(Generator, injected_even_denominator_rejected) {
    Circuit bad = parse_circuit("modes 2\nR 1 cot 1/2\nS 2 2\nSUM 1 2\nP 2 1/2\nMEASURE 1 2");
    DspOutcome out = class_b_check(circuit_to_symplectic(bad));
    ASSERT_FALSE(out.accepted());
    EXPECT_EQ(out.rejection->reason, DspReason::ThetaNotInSet);
    Circuit good = parse_circuit("modes 2\nR 1 cot 1/3\nS 2 2\nSUM 1 2\nP 2 1/2\nMEASURE 1 2");
    EXPECT_TRUE(class_b_check(circuit_to_symplectic(good)).accepted());
}

TEST(Generator, class_b_outputs_pass_single_mode_test) {
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        GeneratedCircuit g = gen_random_class_b(1 + static_cast<int>(seed % 4), seed);
        ASSERT_TRUE(class_b_check(g.transform).accepted()) << render_circuit(g.circuit);
        for (int j : g.circuit.measured) {
            ASSERT_TRUE(rsp_check(track_measurement_operator(g.circuit, j)).accepted) << render_circuit(g.circuit);
        }
    }
}
