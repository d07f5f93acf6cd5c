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

#ifndef GKPSIM_SAMPLER_H
#define GKPSIM_SAMPLER_H

#include <cstdint>
#include <vector>

#include "gkpsim/classify.h"
#include "gkpsim/rng.h"
#include "gkpsim/symplectic.h"

namespace gkpsim {

/// Outcome density of one measured quadrature: a comb supported on
/// { sum_i m_i g_i + c : m_i integer }.
struct CombPDF1D {
    std::vector<double> spacings;
    double offset = 0.0;
    std::vector<ModeVerdict> cases;
};

/// Joint outcome density of k measured quadratures: a comb supported on
/// { G m + c : m in Z^n }.
struct CombPDFnD {
    Matrix matrix;
    Vector offsets;
    std::vector<int> measured;
    std::vector<ThetaClass> classes;
};

struct SampleConfig {
    /// Each m_i is drawn uniformly from [-integer_bound, integer_bound].
    std::int64_t integer_bound = 100;
    std::uint64_t seed = 0;
};

/// Throws Error(NotSimulatable) when the verdict was a rejection.
CombPDF1D build_single_pdf(const LinearQuadratureForm &form, const MembershipVerdict &verdict);
/// Rows of Atilde for the measured (1-based) modes, column i scaled by sqrt(pi) times
/// the peak spacing of theta_i. Throws Error(NotSimulatable) for unclassified angles.
CombPDFnD build_multi_pdf(const DspDecomposition &dec, const std::vector<int> &measured, const Vector &offsets);
/// build_multi_pdf with offsets read from the transform's position displacements.
CombPDFnD build_multi_pdf(const DspDecomposition &dec, const SymplecticTransform &transform,
                          const std::vector<int> &measured);

double sample_single(const CombPDF1D &pdf, std::int64_t bound, SplitMix64 &rng);
Vector sample_multi(const CombPDFnD &pdf, std::int64_t bound, SplitMix64 &rng);
/// First sample of the seeded run, i.e. item 0 of the batch samplers.
double sample_single(const CombPDF1D &pdf, const SampleConfig &cfg);
Vector sample_multi(const CombPDFnD &pdf, const SampleConfig &cfg);

/// True iff some integer m with |m_i| <= bound puts G m + c within tol of x (max-norm).
///
/// Columns are split into a linearly independent set, solved by least squares and
/// rounding, and the remaining columns, which are enumerated. Cost grows as
/// (2 bound + 1)^(n - rank).
bool support_contains(const CombPDF1D &pdf, double x, double tol, std::int64_t bound);
bool support_contains(const CombPDFnD &pdf, const Vector &x, double tol, std::int64_t bound);

}  // namespace gkpsim

#endif
