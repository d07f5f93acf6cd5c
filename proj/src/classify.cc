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

#include <algorithm>
#include <cmath>

#include "gkpsim/error.h"

namespace gkpsim {

const char *mode_case_name(ModeCase kind) {
    switch (kind) {
        case ModeCase::Case1:
            return "case1";
        case ModeCase::Case2:
            return "case2";
        case ModeCase::ZeroCoefficient:
            return "zero";
        case ModeCase::Rejected:
            return "rejected";
    }
    return "unknown";
}

namespace {

ModeVerdict classify_mode(const LinearQuadratureForm &form, size_t i, double scale,
                          const ReconstructionPolicy &recon) {
    ModeVerdict mv{static_cast<int>(i + 1), ModeCase::Rejected, 0, 1, 0.0, ""};
    double a = form.a[i];
    double b = form.b[i];
    bool exact = i < form.exact_a.size() && i < form.exact_b.size() && form.exact_a[i] && form.exact_b[i];
    bool a_zero;
    bool b_zero;
    if (exact) {
        a_zero = form.exact_a[i]->is_zero();
        b_zero = form.exact_b[i]->is_zero();
    } else {
        a_zero = std::fabs(a) <= recon.tol * scale;
        b_zero = std::fabs(b) <= recon.tol * scale;
        if (!recon.allow_float && !(a == 0.0 && b == 0.0)) {
            mv.reason = "mode " + std::to_string(i + 1) + ": inexact coefficients; reconstruction not enabled";
            return mv;
        }
    }
    if (a_zero && b_zero) {
        mv.kind = ModeCase::ZeroCoefficient;
        return mv;
    }
    if (b_zero) {
        mv.kind = ModeCase::Case2;
        mv.lattice_step = 2.0 * std::fabs(a);
        return mv;
    }
    std::optional<Rational> cot;
    if (exact) {
        cot = (-*form.exact_a[i]).try_ratio(*form.exact_b[i]);
        if (!cot) {
            mv.reason = "mode " + std::to_string(i + 1) + ": irrational cotangent";
            return mv;
        }
    } else if (a_zero) {
        cot = Rational(0);
    } else {
        cot = reconstruct_rational(-a / b, recon.max_den, recon.tol);
        if (!cot) {
            mv.reason = "mode " + std::to_string(i + 1) + ": no rational reconstruction of the cotangent";
            return mv;
        }
    }
    ThetaClass cls = classify_cot(*cot);
    if (auto *bad = std::get_if<NotInTheta>(&cls)) {
        mv.reason = "mode " + std::to_string(i + 1) + ": cot = " + cot->str() + ": " + bad->reason;
        return mv;
    }
    const Case1 &c1 = std::get<Case1>(cls);
    mv.kind = ModeCase::Case1;
    mv.u = c1.u;
    mv.v = c1.v;
    mv.lattice_step = std::fabs(b) / c1.v.get_d();
    return mv;
}

}  // namespace

MembershipVerdict rsp_check(const LinearQuadratureForm &form, const ReconstructionPolicy &recon) {
    MembershipVerdict verdict;
    verdict.accepted = true;
    double scale = 0.0;
    for (size_t i = 0; i < form.num_modes(); i++) {
        scale = std::max({scale, std::fabs(form.a[i]), std::fabs(form.b[i])});
    }
    for (size_t i = 0; i < form.num_modes(); i++) {
        ModeVerdict mv = classify_mode(form, i, scale, recon);
        if (mv.kind == ModeCase::Rejected && verdict.accepted) {
            verdict.accepted = false;
            verdict.reason = mv.reason;
        }
        verdict.per_mode.push_back(std::move(mv));
    }
    return verdict;
}

DspOutcome class_b_check(const SymplecticTransform &transform, DspMode mode, const ReconstructionPolicy &recon) {
    return dsp_decompose(transform, mode, kDefaultSymplecticTol, recon);
}

}  // namespace gkpsim
