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

#include "gkpsim/sampler.h"

#include <gtest/gtest.h>

#include <cmath>

#include "gkpsim/circuit.h"
#include "gkpsim/error.h"
#include "test_util.h"

using namespace gkpsim;
using gkpsim_test::kSqrtPi;

namespace {

CombPDF1D single_pdf(const std::string &text, int mode) {
    Circuit c = parse_circuit(text);
    LinearQuadratureForm f = track_measurement_operator(c, mode);
    return build_single_pdf(f, rsp_check(f));
}

CombPDFnD multi_pdf(const std::string &text) {
    Circuit c = parse_circuit(text);
    SymplecticTransform t = circuit_to_symplectic(c);
    DspOutcome out = class_b_check(t);
    if (!out.accepted()) {
        throw Error(ErrorCode::NotSimulatable, out.rejection->detail);
    }
    return build_multi_pdf(*out.decomposition, t, c.measured);
}

bool is_multiple(double x, double step, double tol) {
    double k = std::round(x / step);
    return std::fabs(x - k * step) <= tol;
}

// Brute force over every integer vector in [-bound, bound]^n.
bool brute_force_contains(const std::vector<double> &g, double offset, double x, double tol, int bound) {
    std::vector<int> m(g.size(), -bound);
    while (true) {
        double y = offset;
        for (size_t i = 0; i < g.size(); i++) {
            y += m[i] * g[i];
        }
        if (std::fabs(x - y) <= tol) {
            return true;
        }
        size_t k = 0;
        while (k < m.size() && m[k] == bound) {
            m[k] = -bound;
            k++;
        }
        if (k == m.size()) {
            return false;
        }
        m[k]++;
    }
}

}  // namespace

TEST(Rng, reproducible_and_in_range) {
    SplitMix64 a(17);
    SplitMix64 b(17);
    for (int k = 0; k < 100; k++) {
        EXPECT_EQ(a.next(), b.next());
    }
    SplitMix64 r = SplitMix64::stream(3, 8);
    std::vector<int> hits(7, 0);
    for (int k = 0; k < 7000; k++) {
        std::int64_t v = r.uniform_int(-3, 3);
        ASSERT_GE(v, -3);
        ASSERT_LE(v, 3);
        hits[static_cast<size_t>(v + 3)]++;
    }
    for (int h : hits) {
        EXPECT_GT(h, 800);
        EXPECT_LT(h, 1200);
    }
    EXPECT_EQ(r.uniform_int(5, 5), 5);
    double u = r.uniform_real(2.0, 3.0);
    EXPECT_GE(u, 2.0);
    EXPECT_LT(u, 3.0);
    EXPECT_NE(SplitMix64::stream(3, 0).next(), SplitMix64::stream(3, 1).next());
}

TEST(SinglePdf, examples) {
    CombPDF1D b = single_pdf("modes 2\nF 2\nSUM 2 1\nMEASURE 1", 1);
    ASSERT_EQ(b.spacings.size(), 2u);
    EXPECT_NEAR(b.spacings[0], 2 * kSqrtPi, 1e-12);
    EXPECT_NEAR(b.spacings[1], kSqrtPi, 1e-12);
    EXPECT_EQ(b.offset, 0.0);

    CombPDF1D id = single_pdf("modes 1\nMEASURE 1", 1);
    EXPECT_NEAR(id.spacings[0], 2 * kSqrtPi, 1e-12);

    CombPDF1D shifted = single_pdf("modes 1\nDQ 1 0.7\nMEASURE 1", 1);
    EXPECT_NEAR(shifted.spacings[0], 2 * kSqrtPi, 1e-12);
    EXPECT_DOUBLE_EQ(shifted.offset, 0.7);

    CombPDF1D zero = single_pdf("modes 2\nMEASURE 1", 1);
    EXPECT_EQ(zero.spacings[1], 0.0);
}

TEST(SinglePdf, rejected_form_throws) {
    try {
        single_pdf("modes 1\nF 1\nP 1 1\nP 1 1\nF 1\nMEASURE 1", 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSimulatable);
    }
}

TEST(SinglePdf, sampling_examples) {
    CombPDF1D id = single_pdf("modes 1\nMEASURE 1", 1);
    CombPDF1D b = single_pdf("modes 2\nF 2\nSUM 2 1\nMEASURE 1", 1);
    CombPDF1D flat{{0.0}, 1.5, {}};
    for (std::uint64_t seed = 0; seed < 50; seed++) {
        SampleConfig cfg{100, seed};
        EXPECT_TRUE(is_multiple(sample_single(id, cfg), 2 * kSqrtPi, 1e-12));
        EXPECT_TRUE(is_multiple(sample_single(b, cfg), kSqrtPi, 1e-12));
        EXPECT_EQ(sample_single(flat, cfg), 1.5);
    }
    SampleConfig cfg{100, 9};
    EXPECT_EQ(sample_single(b, cfg), sample_single(b, cfg));
}

TEST(SinglePdf, support_examples) {
    CombPDF1D b = single_pdf("modes 2\nF 2\nSUM 2 1\nMEASURE 1", 1);
    EXPECT_TRUE(support_contains(b, kSqrtPi, 1e-10, 50));
    EXPECT_FALSE(support_contains(b, kSqrtPi / 2, 1e-10, 50));
    EXPECT_FALSE(brute_force_contains(b.spacings, b.offset, kSqrtPi / 2, 1e-10, 50));
    EXPECT_TRUE(support_contains(b, b.offset, 1e-10, 1));
}

TEST(SinglePdf, support_matches_brute_force) {
    std::vector<double> g = {0.7, 1.3, 0.0};
    CombPDF1D pdf{g, 0.25, {}};
    SplitMix64 rng(5);
    for (int k = 0; k < 300; k++) {
        double x = rng.uniform_real(-12.0, 12.0);
        if (k % 3 == 0) {
            x = 0.25 + 0.7 * static_cast<double>(rng.uniform_int(-8, 8)) + 1.3 * static_cast<double>(rng.uniform_int(-8, 8));
        }
        EXPECT_EQ(support_contains(pdf, x, 1e-9, 8), brute_force_contains(g, 0.25, x, 1e-9, 8)) << x;
    }
}

TEST(SinglePdf, lattice_identity) {
    // {2 m1 sqrt(pi) + m2 sqrt(pi)} and {m sqrt(pi)} agree on a window of 20 steps.
    CombPDF1D b = single_pdf("modes 2\nF 2\nSUM 2 1\nMEASURE 1", 1);
    CombPDF1D simple{{kSqrtPi}, 0.0, {}};
    for (int m = -20; m <= 20; m++) {
        EXPECT_TRUE(support_contains(b, m * kSqrtPi, 1e-10, 40));
        double y = b.offset + b.spacings[0] * static_cast<double>(m / 2) + b.spacings[1] * static_cast<double>(m % 7);
        EXPECT_TRUE(support_contains(simple, y, 1e-10, 40));
    }
}

TEST(SinglePdf, samples_in_support) {
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        GeneratedCircuit g = gen_random_class_b(1 + static_cast<int>(seed % 3), seed);
        int j = g.circuit.measured.front();
        LinearQuadratureForm f = track_measurement_operator(g.circuit, j);
        CombPDF1D pdf = build_single_pdf(f, rsp_check(f));
        SplitMix64 rng(seed);
        const std::int64_t bound = 5;
        for (int k = 0; k < 10; k++) {
            double x = sample_single(pdf, bound, rng);
            EXPECT_TRUE(support_contains(pdf, x, 1e-10, bound * static_cast<std::int64_t>(pdf.spacings.size())));
        }
    }
}

TEST(SinglePdf, momentum_displacement_invariance) {
    CombPDF1D base = single_pdf("modes 2\nF 2\nSUM 2 1\nMEASURE 1", 1);
    CombPDF1D shifted = single_pdf("modes 2\nF 2\nSUM 2 1\nDP 1 0.3\nDP 2 -1.1\nMEASURE 1", 1);
    EXPECT_EQ(base.spacings, shifted.spacings);
    EXPECT_EQ(base.offset, shifted.offset);
}

TEST(SinglePdf, final_squeeze_scales_spacings) {
    for (std::uint64_t seed = 0; seed < 30; seed++) {
        GeneratedCircuit g = gen_random_class_b(2, seed);
        Circuit scaled = g.circuit;
        scaled.gates.push_back(Squeeze{1, reduce_fraction(5, 3)});
        CombPDF1D a = build_single_pdf(track_measurement_operator(g.circuit, 1),
                                       rsp_check(track_measurement_operator(g.circuit, 1)));
        CombPDF1D b = build_single_pdf(track_measurement_operator(scaled, 1),
                                       rsp_check(track_measurement_operator(scaled, 1)));
        for (size_t i = 0; i < a.spacings.size(); i++) {
            EXPECT_NEAR(b.spacings[i], a.spacings[i] * 5.0 / 3.0, 1e-12 * (1 + a.spacings[i]));
        }
        EXPECT_NEAR(b.offset, a.offset * 5.0 / 3.0, 1e-12 * (1 + std::fabs(a.offset)));
    }
}

TEST(MultiPdf, examples) {
    CombPDFnD c = multi_pdf("modes 2\nF 1\nSUM 1 2\nMEASURE 1 2");
    Matrix expected(2, 2);
    expected << kSqrtPi, 0, kSqrtPi, 2 * kSqrtPi;
    EXPECT_LE((c.matrix - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(c.offsets.cwiseAbs().maxCoeff(), 0.0);

    CombPDFnD shifted = multi_pdf("modes 2\nF 1\nSUM 1 2\nDQ 2 1.0\nMEASURE 1 2");
    EXPECT_LE((shifted.matrix - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_DOUBLE_EQ(shifted.offsets(0), 0.0);
    EXPECT_DOUBLE_EQ(shifted.offsets(1), 1.0);

    CombPDFnD id = multi_pdf("modes 2\nMEASURE 1 2");
    Matrix diag = Matrix::Identity(2, 2) * 2 * kSqrtPi;
    EXPECT_LE((id.matrix - diag).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(MultiPdf, samples_follow_structure) {
    CombPDFnD c = multi_pdf("modes 2\nF 1\nSUM 1 2\nMEASURE 1 2");
    CombPDFnD id = multi_pdf("modes 2\nMEASURE 1 2");
    for (std::uint64_t seed = 0; seed < 100; seed++) {
        SampleConfig cfg{100, seed};
        Vector x = sample_multi(c, cfg);
        EXPECT_TRUE(is_multiple(x(1) - x(0), 2 * kSqrtPi, 1e-12));
        EXPECT_TRUE(is_multiple(x(0), kSqrtPi, 1e-12));
        Vector y = sample_multi(id, cfg);
        EXPECT_TRUE(is_multiple(y(0), 2 * kSqrtPi, 1e-12));
        EXPECT_TRUE(is_multiple(y(1), 2 * kSqrtPi, 1e-12));
    }
    SampleConfig cfg{100, 4};
    EXPECT_EQ(sample_multi(c, cfg), sample_multi(c, cfg));
}

TEST(MultiPdf, support_queries) {
    CombPDFnD c = multi_pdf("modes 2\nF 1\nSUM 1 2\nMEASURE 1 2");
    Vector x(2);
    x << 3 * kSqrtPi, 7 * kSqrtPi;
    EXPECT_TRUE(support_contains(c, x, 1e-10, 10));
    x << 3 * kSqrtPi, 6 * kSqrtPi;
    EXPECT_FALSE(support_contains(c, x, 1e-10, 10));
    EXPECT_TRUE(support_contains(c, c.offsets, 1e-10, 1));
    Vector wrong(3);
    EXPECT_THROW(support_contains(c, wrong, 1e-10, 1), Error);
}

TEST(MultiPdf, samples_in_support) {
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        GeneratedCircuit g = gen_random_class_b(1 + static_cast<int>(seed % 3), seed);
        DspOutcome out = class_b_check(g.transform);
        ASSERT_TRUE(out.accepted());
        CombPDFnD pdf = build_multi_pdf(*out.decomposition, g.transform, g.circuit.measured);
        SplitMix64 rng(seed);
        const std::int64_t bound = 4;
        for (int k = 0; k < 5; k++) {
            Vector x = sample_multi(pdf, bound, rng);
            EXPECT_TRUE(support_contains(pdf, x, 1e-10, bound * pdf.matrix.cols())) << render_circuit(g.circuit);
        }
    }
}

TEST(MultiPdf, unclassified_angles_throw) {
    DspDecomposition dec;
    dec.atilde = Matrix::Identity(1, 1);
    dec.ctilde = Matrix::Zero(1, 1);
    dec.thetas = {CotRational{reduce_fraction(1, 2)}};
    dec.classes = {NotInTheta{"even denominator"}};
    Vector offsets = Vector::Zero(1);
    EXPECT_THROW(build_multi_pdf(dec, {1}, offsets), Error);
}
