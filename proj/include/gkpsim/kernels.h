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

#ifndef GKPSIM_KERNELS_H
#define GKPSIM_KERNELS_H

#include <cstdint>
#include <variant>
#include <vector>

#include "gkpsim/oracle.h"
#include "gkpsim/sampler.h"

namespace gkpsim {

// Each kernel has a serial reference and an OpenMP version with identical output.

struct IdealSource {
    double theta;
    double s;
    int truncation = kDefaultTruncation;
};
struct RealisticSource {
    RealisticGkpParams params;
    int truncation = kAutoTruncation;
};
struct RealisticIdentitySource {
    double delta_gkp;
    double s;
    int truncation = kAutoTruncation;
};

using WavefunctionSource = std::variant<IdealSource, RealisticSource, RealisticIdentitySource>;

Complex evaluate_wavefunction(const WavefunctionSource &source, double x);

/// |psi(x - shift)|^2 at every grid point.
GridPdf density_grid_serial(const WavefunctionSource &source, const std::vector<double> &xs, double shift = 0.0);
GridPdf density_grid_parallel(const WavefunctionSource &source, const std::vector<double> &xs,
                              double shift = 0.0);

/// Sample i of a batch uses SplitMix64::stream(cfg.seed, i).
std::vector<double> sample_single_batch_serial(const CombPDF1D &pdf, const SampleConfig &cfg, size_t count);
std::vector<double> sample_single_batch_parallel(const CombPDF1D &pdf, const SampleConfig &cfg, size_t count);
/// One row per sample.
Matrix sample_multi_batch_serial(const CombPDFnD &pdf, const SampleConfig &cfg, size_t count);
Matrix sample_multi_batch_parallel(const CombPDFnD &pdf, const SampleConfig &cfg, size_t count);

struct GaussSweepResult {
    /// max | |G(u, v, n')| - sqrt(v) | over the sweep.
    double max_deviation = 0.0;
    std::uint64_t sums = 0;
};

/// Every odd v <= max_v, every u in [0, v) coprime to v, every n' in [0, v).
GaussSweepResult gauss_sweep_serial(std::int64_t max_v);
GaussSweepResult gauss_sweep_parallel(std::int64_t max_v);

}  // namespace gkpsim

#endif
