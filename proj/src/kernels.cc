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

#include "gkpsim/kernels.h"

#include <omp.h>

#include <cmath>
#include <numeric>

#include "gkpsim/error.h"
#include "gkpsim/numtheory.h"
#include "overloaded.h"

namespace gkpsim {

namespace {

void check_config(const SampleConfig &cfg) {
    if (cfg.integer_bound < 1) {
        throw Error(ErrorCode::Domain, "integer bound must be at least 1");
    }
}

double sweep_one(std::int64_t v, std::uint64_t &sums) {
    double worst = 0.0;
    double root = std::sqrt(static_cast<double>(v));
    for (std::int64_t u = 0; u < v; u++) {
        if (std::gcd(u, v) != 1) {
            continue;
        }
        for (std::int64_t shift = 0; shift < v; shift++) {
            double mag = std::abs(gauss_sum(u, v, shift).value);
            worst = std::max(worst, std::fabs(mag - root));
            sums++;
        }
    }
    return worst;
}

}  // namespace

Complex evaluate_wavefunction(const WavefunctionSource &source, double x) {
    return std::visit(overloaded{
                          [&](const IdealSource &s) { return ideal_rotated_wavefunction(x, s.theta, s.s, s.truncation); },
                          [&](const RealisticSource &s) { return realistic_wavefunction(x, s.params, s.truncation); },
                          [&](const RealisticIdentitySource &s) {
                              return realistic_identity_wavefunction(x, s.delta_gkp, s.s, s.truncation);
                          },
                      },
                      source);
}

GridPdf density_grid_serial(const WavefunctionSource &source, const std::vector<double> &xs, double shift) {
    GridPdf grid{xs, std::vector<double>(xs.size())};
    for (size_t k = 0; k < xs.size(); k++) {
        grid.values[k] = std::norm(evaluate_wavefunction(source, xs[k] - shift));
    }
    return grid;
}

GridPdf density_grid_parallel(const WavefunctionSource &source, const std::vector<double> &xs, double shift) {
    GridPdf grid{xs, std::vector<double>(xs.size())};
    std::int64_t count = static_cast<std::int64_t>(xs.size());
    bool failed = false;
    Error first_error(ErrorCode::Domain, "");
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < count; k++) {
        try {
            grid.values[k] = std::norm(evaluate_wavefunction(source, xs[k] - shift));
        } catch (const Error &e) {
#pragma omp critical
            {
                if (!failed) {
                    failed = true;
                    first_error = e;
                }
            }
        }
    }
    if (failed) {
        throw first_error;
    }
    return grid;
}

std::vector<double> sample_single_batch_serial(const CombPDF1D &pdf, const SampleConfig &cfg, size_t count) {
    check_config(cfg);
    std::vector<double> out(count);
    for (size_t i = 0; i < count; i++) {
        SplitMix64 rng = SplitMix64::stream(cfg.seed, i);
        out[i] = sample_single(pdf, cfg.integer_bound, rng);
    }
    return out;
}

std::vector<double> sample_single_batch_parallel(const CombPDF1D &pdf, const SampleConfig &cfg, size_t count) {
    check_config(cfg);
    std::vector<double> out(count);
    std::int64_t n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; i++) {
        SplitMix64 rng = SplitMix64::stream(cfg.seed, static_cast<std::uint64_t>(i));
        out[i] = sample_single(pdf, cfg.integer_bound, rng);
    }
    return out;
}

Matrix sample_multi_batch_serial(const CombPDFnD &pdf, const SampleConfig &cfg, size_t count) {
    check_config(cfg);
    Matrix out(static_cast<Eigen::Index>(count), pdf.matrix.rows());
    for (size_t i = 0; i < count; i++) {
        SplitMix64 rng = SplitMix64::stream(cfg.seed, i);
        out.row(static_cast<Eigen::Index>(i)) = sample_multi(pdf, cfg.integer_bound, rng).transpose();
    }
    return out;
}

Matrix sample_multi_batch_parallel(const CombPDFnD &pdf, const SampleConfig &cfg, size_t count) {
    check_config(cfg);
    Matrix out(static_cast<Eigen::Index>(count), pdf.matrix.rows());
    std::int64_t n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; i++) {
        SplitMix64 rng = SplitMix64::stream(cfg.seed, static_cast<std::uint64_t>(i));
        out.row(i) = sample_multi(pdf, cfg.integer_bound, rng).transpose();
    }
    return out;
}

GaussSweepResult gauss_sweep_serial(std::int64_t max_v) {
    GaussSweepResult result;
    for (std::int64_t v = 1; v <= max_v; v += 2) {
        result.max_deviation = std::max(result.max_deviation, sweep_one(v, result.sums));
    }
    return result;
}

GaussSweepResult gauss_sweep_parallel(std::int64_t max_v) {
    double worst = 0.0;
    std::uint64_t sums = 0;
    std::int64_t count = max_v < 1 ? 0 : (max_v + 1) / 2;
#pragma omp parallel for schedule(dynamic) reduction(max : worst) reduction(+ : sums)
    for (std::int64_t k = count - 1; k >= 0; k--) {
        std::uint64_t local = 0;
        worst = std::max(worst, sweep_one(2 * k + 1, local));
        sums += local;
    }
    return GaussSweepResult{worst, sums};
}

}  // namespace gkpsim
