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

#include <cmath>
#include <numbers>

#include "gkpsim/error.h"

namespace gkpsim {

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

bool lattice_contains(const Matrix &g, const Vector &offset, const Vector &x, double tol, std::int64_t bound) {
    if (x.size() != g.rows()) {
        throw Error(ErrorCode::ModeMismatch, "point dimension does not match the comb");
    }
    std::vector<Eigen::Index> nonzero;
    for (Eigen::Index c = 0; c < g.cols(); c++) {
        if (g.col(c).cwiseAbs().maxCoeff() > 0.0) {
            nonzero.push_back(c);
        }
    }
    Vector target = x - offset;
    if (nonzero.empty()) {
        return target.cwiseAbs().maxCoeff() <= tol;
    }
    Matrix reduced(g.rows(), static_cast<Eigen::Index>(nonzero.size()));
    for (size_t k = 0; k < nonzero.size(); k++) {
        reduced.col(static_cast<Eigen::Index>(k)) = g.col(nonzero[k]);
    }
    Eigen::ColPivHouseholderQR<Matrix> pivoted(reduced);
    pivoted.setThreshold(1e-12);
    Eigen::Index rank = pivoted.rank();
    const auto &perm = pivoted.colsPermutation().indices();
    Matrix basis(g.rows(), rank);
    for (Eigen::Index k = 0; k < rank; k++) {
        basis.col(k) = reduced.col(perm(k));
    }
    Eigen::Index free_count = reduced.cols() - rank;
    Matrix free_cols(g.rows(), free_count);
    for (Eigen::Index k = 0; k < free_count; k++) {
        free_cols.col(k) = reduced.col(perm(rank + k));
    }
    Eigen::ColPivHouseholderQR<Matrix> solver(basis);

    std::vector<std::int64_t> m_free(static_cast<size_t>(free_count), -bound);
    while (true) {
        Vector y = target;
        for (Eigen::Index k = 0; k < free_count; k++) {
            y -= free_cols.col(k) * static_cast<double>(m_free[k]);
        }
        Vector m = solver.solve(y);
        bool in_range = true;
        for (Eigen::Index k = 0; k < rank; k++) {
            m(k) = std::round(m(k));
            in_range = in_range && std::fabs(m(k)) <= static_cast<double>(bound);
        }
        if (in_range && (basis * m - y).cwiseAbs().maxCoeff() <= tol) {
            return true;
        }
        Eigen::Index k = 0;
        while (k < free_count && m_free[k] == bound) {
            m_free[k] = -bound;
            k++;
        }
        if (k == free_count) {
            return false;
        }
        m_free[k]++;
    }
}

}  // namespace

CombPDF1D build_single_pdf(const LinearQuadratureForm &form, const MembershipVerdict &verdict) {
    if (!verdict.accepted) {
        throw Error(ErrorCode::NotSimulatable, "circuit is not simulatable: " + verdict.reason);
    }
    if (verdict.per_mode.size() != form.num_modes()) {
        throw Error(ErrorCode::ModeMismatch, "verdict does not match the form");
    }
    CombPDF1D pdf;
    pdf.offset = form.c;
    pdf.cases = verdict.per_mode;
    for (const ModeVerdict &mv : verdict.per_mode) {
        pdf.spacings.push_back(kSqrtPi * mv.lattice_step);
    }
    return pdf;
}

CombPDFnD build_multi_pdf(const DspDecomposition &dec, const std::vector<int> &measured, const Vector &offsets) {
    Eigen::Index n = dec.atilde.cols();
    if (dec.classes.size() != static_cast<size_t>(n)) {
        throw Error(ErrorCode::NotSimulatable, "decomposition angles are not classified");
    }
    if (offsets.size() != static_cast<Eigen::Index>(measured.size())) {
        throw Error(ErrorCode::ModeMismatch, "one offset per measured mode is required");
    }
    CombPDFnD pdf;
    pdf.matrix = Matrix(static_cast<Eigen::Index>(measured.size()), n);
    pdf.offsets = offsets;
    pdf.measured = measured;
    pdf.classes = dec.classes;
    for (size_t r = 0; r < measured.size(); r++) {
        int j = measured[r];
        if (j < 1 || j > n) {
            throw Error(ErrorCode::IndexOutOfRange, "measured mode out of range");
        }
        for (Eigen::Index i = 0; i < n; i++) {
            pdf.matrix(static_cast<Eigen::Index>(r), i) = dec.atilde(j - 1, i) * kSqrtPi * peak_spacing(dec.classes[i]);
        }
    }
    return pdf;
}

CombPDFnD build_multi_pdf(const DspDecomposition &dec, const SymplecticTransform &transform,
                          const std::vector<int> &measured) {
    Vector offsets(static_cast<Eigen::Index>(measured.size()));
    for (size_t r = 0; r < measured.size(); r++) {
        int j = measured[r];
        if (j < 1 || static_cast<size_t>(j) > transform.num_modes()) {
            throw Error(ErrorCode::IndexOutOfRange, "measured mode out of range");
        }
        offsets(static_cast<Eigen::Index>(r)) = transform.displacement()(j - 1);
    }
    return build_multi_pdf(dec, measured, offsets);
}

double sample_single(const CombPDF1D &pdf, std::int64_t bound, SplitMix64 &rng) {
    double x = pdf.offset;
    for (double g : pdf.spacings) {
        x += static_cast<double>(rng.uniform_int(-bound, bound)) * g;
    }
    return x;
}

Vector sample_multi(const CombPDFnD &pdf, std::int64_t bound, SplitMix64 &rng) {
    Vector m(pdf.matrix.cols());
    for (Eigen::Index i = 0; i < m.size(); i++) {
        m(i) = static_cast<double>(rng.uniform_int(-bound, bound));
    }
    return pdf.matrix * m + pdf.offsets;
}

double sample_single(const CombPDF1D &pdf, const SampleConfig &cfg) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, 0);
    return sample_single(pdf, cfg.integer_bound, rng);
}

Vector sample_multi(const CombPDFnD &pdf, const SampleConfig &cfg) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, 0);
    return sample_multi(pdf, cfg.integer_bound, rng);
}

bool support_contains(const CombPDF1D &pdf, double x, double tol, std::int64_t bound) {
    Matrix g(1, static_cast<Eigen::Index>(pdf.spacings.size()));
    for (size_t i = 0; i < pdf.spacings.size(); i++) {
        g(0, static_cast<Eigen::Index>(i)) = pdf.spacings[i];
    }
    Vector offset(1);
    offset(0) = pdf.offset;
    Vector point(1);
    point(0) = x;
    return lattice_contains(g, offset, point, tol, bound);
}

bool support_contains(const CombPDFnD &pdf, const Vector &x, double tol, std::int64_t bound) {
    return lattice_contains(pdf.matrix, pdf.offsets, x, tol, bound);
}

}  // namespace gkpsim
