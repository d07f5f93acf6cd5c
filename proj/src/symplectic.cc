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

#include "gkpsim/symplectic.h"

#include <algorithm>
#include <cmath>

#include "gkpsim/error.h"

namespace gkpsim {

namespace {

size_t checked_modes(const Matrix &matrix, const Vector &displacement) {
    if (matrix.rows() != matrix.cols() || matrix.rows() % 2 != 0 || matrix.rows() == 0) {
        throw Error(ErrorCode::ModeMismatch, "transform matrix must be 2n x 2n with n >= 1");
    }
    if (displacement.size() != matrix.rows()) {
        throw Error(ErrorCode::ModeMismatch, "displacement length does not match the matrix");
    }
    return static_cast<size_t>(matrix.rows() / 2);
}

double max_abs(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

SymplecticTransform::SymplecticTransform(Matrix matrix, Vector displacement)
    : n_(checked_modes(matrix, displacement)), matrix_(std::move(matrix)), displacement_(std::move(displacement)) {
}

SymplecticTransform::SymplecticTransform(Matrix matrix, Vector displacement, std::vector<ExactValue> exact)
    : n_(checked_modes(matrix, displacement)),
      matrix_(std::move(matrix)),
      displacement_(std::move(displacement)),
      exact_(std::move(exact)) {
    if (!exact_.empty() && exact_.size() != 4 * n_ * n_) {
        throw Error(ErrorCode::ModeMismatch, "exact shadow has the wrong number of entries");
    }
}

SymplecticTransform SymplecticTransform::identity(size_t n) {
    std::vector<ExactValue> exact(4 * n * n, Surd());
    for (size_t k = 0; k < 2 * n; k++) {
        exact[k * 2 * n + k] = Surd(1);
    }
    return SymplecticTransform(Matrix::Identity(2 * n, 2 * n), Vector::Zero(2 * n), std::move(exact));
}

SymplecticTransform SymplecticTransform::from_rationals(size_t n, const std::vector<Rational> &entries,
                                                        const std::vector<Rational> &displacement) {
    if (entries.size() != 4 * n * n || displacement.size() != 2 * n) {
        throw Error(ErrorCode::ModeMismatch, "rational transform has the wrong shape");
    }
    Matrix m(2 * n, 2 * n);
    std::vector<ExactValue> exact(entries.size());
    for (size_t r = 0; r < 2 * n; r++) {
        for (size_t c = 0; c < 2 * n; c++) {
            const Rational &e = entries[r * 2 * n + c];
            m(r, c) = e.to_double();
            exact[r * 2 * n + c] = Surd(e);
        }
    }
    Vector d(2 * n);
    for (size_t k = 0; k < 2 * n; k++) {
        d(k) = displacement[k].to_double();
    }
    return SymplecticTransform(std::move(m), std::move(d), std::move(exact));
}

ExactValue SymplecticTransform::exact_entry(size_t row, size_t col) const {
    if (row >= 2 * n_ || col >= 2 * n_) {
        throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
    }
    if (exact_.empty()) {
        return std::nullopt;
    }
    return exact_[row * 2 * n_ + col];
}

BlockView SymplecticTransform::blocks() const {
    Eigen::Index n = static_cast<Eigen::Index>(n_);
    return BlockView{matrix_.block(0, 0, n, n), matrix_.block(0, n, n, n), matrix_.block(n, 0, n, n),
                     matrix_.block(n, n, n, n)};
}

Matrix symplectic_form(size_t n) {
    Eigen::Index k = static_cast<Eigen::Index>(n);
    Matrix omega = Matrix::Zero(2 * k, 2 * k);
    omega.block(0, k, k, k) = -Matrix::Identity(k, k);
    omega.block(k, 0, k, k) = Matrix::Identity(k, k);
    return omega;
}

SymplecticTransform compose(const SymplecticTransform &first, const SymplecticTransform &second) {
    if (first.num_modes() != second.num_modes()) {
        throw Error(ErrorCode::ModeMismatch, "cannot compose transforms on different mode counts");
    }
    Matrix m = first.matrix() * second.matrix();
    Vector d = first.matrix() * second.displacement() + first.displacement();
    if (first.exact_entries().empty() || second.exact_entries().empty()) {
        return SymplecticTransform(std::move(m), std::move(d));
    }
    size_t dim = 2 * first.num_modes();
    std::vector<ExactValue> exact(dim * dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            ExactValue acc = Surd();
            for (size_t k = 0; k < dim && acc; k++) {
                acc = exact_add(acc, exact_mul(first.exact_entry(r, k), second.exact_entry(k, c)));
            }
            exact[r * dim + c] = acc;
        }
    }
    return SymplecticTransform(std::move(m), std::move(d), std::move(exact));
}

double symplectic_error(const SymplecticTransform &transform) {
    const Matrix &m = transform.matrix();
    Matrix omega = symplectic_form(transform.num_modes());
    double scale = std::max(1.0, max_abs(m) * max_abs(m));
    return max_abs(m.transpose() * omega * m - omega) / scale;
}

bool validate(const SymplecticTransform &transform, double tol) {
    return symplectic_error(transform) <= tol;
}

const char *dsp_reason_name(DspReason reason) {
    switch (reason) {
        case DspReason::InconsistentRatios:
            return "inconsistent-ratios";
        case DspReason::SingularAtilde:
            return "singular-atilde";
        case DspReason::AsymmetricAtilde:
            return "asymmetric-atilde";
        case DspReason::ThetaNotInSet:
            return "theta-not-in-set";
    }
    return "unknown";
}

Matrix rotation_matrix(const std::vector<AngleSpec> &thetas) {
    Eigen::Index n = static_cast<Eigen::Index>(thetas.size());
    Matrix r = Matrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; i++) {
        double c = angle_cos(thetas[i]);
        double s = angle_sin(thetas[i]);
        r(i, i) = c;
        r(i, n + i) = -s;
        r(n + i, i) = s;
        r(n + i, n + i) = c;
    }
    return r;
}

namespace {

DspOutcome reject(DspReason reason, size_t mode, std::string detail) {
    DspOutcome out;
    out.rejection = DspRejection{reason, mode, std::move(detail)};
    return out;
}

/// Angle of column i, or a rejection.
std::variant<AngleSpec, DspRejection> column_angle(const SymplecticTransform &t, size_t i, double tol,
                                                   double scale) {
    size_t n = t.num_modes();
    BlockView blocks = t.blocks();
    bool exact = true;
    for (size_t j = 0; j < n; j++) {
        exact = exact && t.exact_entry(j, i).has_value() && t.exact_entry(j, n + i).has_value();
    }

    auto a_zero = [&](size_t j) {
        return exact ? t.exact_entry(j, i)->is_zero() : std::fabs(blocks.A(j, i)) <= tol * scale;
    };
    auto b_zero = [&](size_t j) {
        return exact ? t.exact_entry(j, n + i)->is_zero() : std::fabs(blocks.B(j, i)) <= tol * scale;
    };
    bool all_a_zero = true;
    bool all_b_zero = true;
    size_t pivot = 0;
    for (size_t j = 0; j < n; j++) {
        all_a_zero = all_a_zero && a_zero(j);
        all_b_zero = all_b_zero && b_zero(j);
        if (std::fabs(blocks.B(j, i)) > std::fabs(blocks.B(pivot, i)) && !b_zero(j)) {
            pivot = j;
        }
    }
    if (all_a_zero && all_b_zero) {
        return DspRejection{DspReason::SingularAtilde, i, "column " + std::to_string(i + 1) + " vanishes"};
    }
    if (all_b_zero) {
        return AngleSpec{PiMultiple{0}};
    }
    if (b_zero(pivot)) {
        for (size_t j = 0; j < n; j++) {
            if (!b_zero(j)) {
                pivot = j;
                break;
            }
        }
    }

    std::string where = "column " + std::to_string(i + 1);
    if (exact) {
        Surd ap = *t.exact_entry(pivot, i);
        Surd bp = *t.exact_entry(pivot, n + i);
        for (size_t j = 0; j < n; j++) {
            Surd aj = *t.exact_entry(j, i);
            Surd bj = *t.exact_entry(j, n + i);
            if (!(aj * bp == ap * bj)) {
                return DspRejection{DspReason::InconsistentRatios, i, where + ": A and B columns are not proportional"};
            }
        }
        auto cot = (-ap).try_ratio(bp);
        if (!cot) {
            return DspRejection{DspReason::ThetaNotInSet, i, where + ": irrational cotangent"};
        }
        return AngleSpec{CotRational{*cot}};
    }

    double ap = blocks.A(pivot, i);
    double bp = blocks.B(pivot, i);
    for (size_t j = 0; j < n; j++) {
        if (std::fabs(blocks.A(j, i) * bp - ap * blocks.B(j, i)) > tol * scale * scale) {
            return DspRejection{DspReason::InconsistentRatios, i, where + ": A and B columns are not proportional"};
        }
    }
    // Choose the sign of Atilde so that sin(theta) > 0.
    double sign = bp < 0 ? 1.0 : -1.0;
    return AngleSpec{Radians{std::atan2(-bp * sign, ap * sign)}};
}

}  // namespace

DspOutcome dsp_decompose(const SymplecticTransform &transform, DspMode mode, double tol,
                         const ReconstructionPolicy &recon) {
    if (!validate(transform, std::max(tol, kDefaultSymplecticTol))) {
        throw Error(ErrorCode::NotSymplectic, "transform is not symplectic");
    }
    size_t n = transform.num_modes();
    Eigen::Index k = static_cast<Eigen::Index>(n);
    double scale = std::max(1.0, max_abs(transform.matrix()));

    DspDecomposition dec;
    for (size_t i = 0; i < n; i++) {
        auto angle = column_angle(transform, i, tol, scale);
        if (auto *rej = std::get_if<DspRejection>(&angle)) {
            DspOutcome out;
            out.rejection = *rej;
            return out;
        }
        dec.thetas.push_back(std::get<AngleSpec>(angle));
    }

    Matrix left = transform.matrix() * rotation_matrix(dec.thetas).transpose();
    dec.atilde = left.block(0, 0, k, k);
    dec.ctilde = left.block(k, 0, k, k);
    if (max_abs(left.block(0, k, k, k)) > tol * scale * 10) {
        return reject(DspReason::InconsistentRatios, 0, "rotation does not clear the upper-right block");
    }

    double hadamard = 1.0;
    for (Eigen::Index c = 0; c < k; c++) {
        hadamard *= dec.atilde.col(c).norm();
    }
    if (hadamard == 0.0 || std::fabs(dec.atilde.determinant()) / hadamard < tol) {
        return reject(DspReason::SingularAtilde, 0, "Atilde is singular");
    }
    Matrix ac = dec.atilde.transpose() * dec.ctilde;
    if (max_abs(ac - ac.transpose()) > tol * scale * scale * 10) {
        return reject(DspReason::InconsistentRatios, 0, "Atilde^T Ctilde is not symmetric");
    }
    if (mode == DspMode::Strict && max_abs(dec.atilde - dec.atilde.transpose()) > tol * scale) {
        return reject(DspReason::AsymmetricAtilde, 0, "Atilde is not symmetric");
    }

    for (size_t i = 0; i < n; i++) {
        ThetaClass cls = classify_angle(dec.thetas[i], recon);
        if (auto *bad = std::get_if<NotInTheta>(&cls)) {
            return reject(DspReason::ThetaNotInSet, i,
                          "mode " + std::to_string(i + 1) + ": " + angle_str(dec.thetas[i]) + ": " + bad->reason);
        }
        dec.classes.push_back(cls);
    }
    DspOutcome out;
    out.decomposition = std::move(dec);
    return out;
}

}  // namespace gkpsim
