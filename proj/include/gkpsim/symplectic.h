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

#ifndef GKPSIM_SYMPLECTIC_H
#define GKPSIM_SYMPLECTIC_H

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "gkpsim/angle.h"
#include "gkpsim/surd.h"

namespace gkpsim {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kDefaultSymplecticTol = 1e-9;

/// Read-only n x n blocks of a 2n x 2n matrix in (q1..qn, p1..pn) ordering:
/// M = [[A, B], [C, D]].
struct BlockView {
    Eigen::Block<const Matrix> A;
    Eigen::Block<const Matrix> B;
    Eigen::Block<const Matrix> C;
    Eigen::Block<const Matrix> D;
};

/// Heisenberg action r -> M r + rbar of a Gaussian unitary on n modes.
///
/// Alongside the floating-point matrix an optional exact shadow of every entry is
/// kept; entries whose exact value is unknown are nullopt.
class SymplecticTransform {
   public:
    SymplecticTransform(Matrix matrix, Vector displacement);
    SymplecticTransform(Matrix matrix, Vector displacement, std::vector<ExactValue> exact);

    static SymplecticTransform identity(size_t n);
    /// Builds a transform from rational entries (row-major 2n x 2n) and displacement.
    static SymplecticTransform from_rationals(size_t n, const std::vector<Rational> &entries,
                                              const std::vector<Rational> &displacement);

    size_t num_modes() const {
        return n_;
    }
    const Matrix &matrix() const {
        return matrix_;
    }
    const Vector &displacement() const {
        return displacement_;
    }
    /// Exact value of entry (row, col), nullopt when unknown.
    ExactValue exact_entry(size_t row, size_t col) const;
    const std::vector<ExactValue> &exact_entries() const {
        return exact_;
    }
    BlockView blocks() const;

   private:
    size_t n_;
    Matrix matrix_;
    Vector displacement_;
    std::vector<ExactValue> exact_;  // row-major, empty when no entry is known
};

/// Omega = [[0, -I], [I, 0]].
Matrix symplectic_form(size_t n);

/// Transform of "apply first, then second": M = M_first M_second,
/// rbar = M_first rbar_second + rbar_first. Throws Error(ModeMismatch).
SymplecticTransform compose(const SymplecticTransform &first, const SymplecticTransform &second);

/// max |M^T Omega M - Omega| divided by max(1, max |M|^2).
double symplectic_error(const SymplecticTransform &transform);
bool validate(const SymplecticTransform &transform, double tol = kDefaultSymplecticTol);

enum class DspMode { Strict, Permissive };

/// M = [[Atilde, 0], [Ctilde, Atilde^{-T}]] R(theta), with per-mode Heisenberg rotations R.
struct DspDecomposition {
    Matrix atilde;
    Matrix ctilde;
    std::vector<AngleSpec> thetas;
    std::vector<ThetaClass> classes;
};

enum class DspReason { InconsistentRatios, SingularAtilde, AsymmetricAtilde, ThetaNotInSet };
const char *dsp_reason_name(DspReason reason);

struct DspRejection {
    DspReason reason;
    size_t mode;  // 0-based column where the failure was detected
    std::string detail;
};

struct DspOutcome {
    std::optional<DspDecomposition> decomposition;
    std::optional<DspRejection> rejection;
    bool accepted() const {
        return decomposition.has_value();
    }
};

/// Decomposes M into the diagonal-rotation form and classifies every angle.
///
/// Column i of B must be proportional to column i of A (the ratio fixes theta_i).
/// Permissive mode requires Atilde invertible with Atilde^T Ctilde symmetric;
/// strict mode also requires Atilde symmetric. Throws Error(NotSymplectic).
DspOutcome dsp_decompose(const SymplecticTransform &transform, DspMode mode = DspMode::Permissive,
                         double tol = kDefaultSymplecticTol, const ReconstructionPolicy &recon = {});

/// Block-diagonal Heisenberg rotation matrix for per-mode angles.
Matrix rotation_matrix(const std::vector<AngleSpec> &thetas);

}  // namespace gkpsim

#endif
