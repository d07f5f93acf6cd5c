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

#include "gkpsim/cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "gkpsim/circuit.h"
#include "gkpsim/classify.h"
#include "gkpsim/error.h"
#include "gkpsim/json_io.h"
#include "gkpsim/kernels.h"
#include "gkpsim/oracle.h"
#include "gkpsim/sampler.h"

namespace gkpsim {

namespace {

using nlohmann::json;

const double kSqrtPi = std::sqrt(std::numbers::pi);

Circuit load_circuit(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot read circuit file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_circuit(text.str());
    } catch (const ParseError &e) {
        throw Error(ErrorCode::Parse, path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                                          e.detail());
    }
}

ReconstructionPolicy policy(const CliRequest &req) {
    if (req.max_den < 1) {
        throw Error(ErrorCode::Domain, "--max-den must be positive");
    }
    if (!(req.tol > 0.0)) {
        throw Error(ErrorCode::Domain, "--tol must be positive");
    }
    return ReconstructionPolicy{req.max_den, req.tol, req.float_angles};
}

DspMode dsp_mode(const CliRequest &req) {
    return req.strict_dsp ? DspMode::Strict : DspMode::Permissive;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Runs body, mapping library errors onto exit codes.
template <class Body>
int guarded(std::ostream &err, Body body) {
    try {
        return body();
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::NotSimulatable ? kExitNotSimulatable : kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

struct Analysis {
    Circuit circuit;
    std::optional<LinearQuadratureForm> form;
    std::optional<MembershipVerdict> verdict;
    std::optional<SymplecticTransform> transform;
    std::optional<DspOutcome> outcome;

    bool accepted() const {
        return verdict ? verdict->accepted : outcome->accepted();
    }
    std::string reason() const {
        if (verdict) {
            return verdict->reason;
        }
        return std::string(dsp_reason_name(outcome->rejection->reason)) + ": " + outcome->rejection->detail;
    }
};

Analysis analyse(const CliRequest &req) {
    Analysis a{load_circuit(req.circuit_path), {}, {}, {}, {}};
    ReconstructionPolicy recon = policy(req);
    if (a.circuit.measured.size() == 1) {
        a.form = track_measurement_operator(a.circuit, a.circuit.measured[0]);
        a.verdict = rsp_check(*a.form, recon);
    } else {
        a.transform = circuit_to_symplectic(a.circuit);
        a.outcome = class_b_check(*a.transform, dsp_mode(req), recon);
    }
    return a;
}

}  // namespace

int run_check(const CliRequest &req, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Analysis a = analyse(req);
        json report = a.verdict ? to_json(*a.verdict) : to_json(*a.outcome);
        out << report.dump() << "\n";
        return a.accepted() ? kExitOk : kExitNotSimulatable;
    });
}

int run_pdf(const CliRequest &req, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Analysis a = analyse(req);
        if (!a.accepted()) {
            err << "not simulatable: " << a.reason() << "\n";
            return kExitNotSimulatable;
        }
        if (a.verdict) {
            out << to_json(build_single_pdf(*a.form, *a.verdict)).dump() << "\n";
        } else {
            out << to_json(build_multi_pdf(*a.outcome->decomposition, *a.transform, a.circuit.measured)).dump()
                << "\n";
        }
        return kExitOk;
    });
}

int run_sample(const CliRequest &req, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (req.count < 0) {
            throw Error(ErrorCode::Domain, "--count must be nonnegative");
        }
        if (req.bound < 1) {
            throw Error(ErrorCode::Domain, "--bound must be at least 1");
        }
        Analysis a = analyse(req);
        if (!a.accepted()) {
            err << "not simulatable: " << a.reason() << "\n";
            return kExitNotSimulatable;
        }
        SampleConfig cfg{req.bound, req.seed};
        size_t count = static_cast<size_t>(req.count);
        if (a.verdict) {
            CombPDF1D pdf = build_single_pdf(*a.form, *a.verdict);
            for (double x : sample_single_batch_parallel(pdf, cfg, count)) {
                out << format_double(x) << "\n";
            }
        } else {
            CombPDFnD pdf = build_multi_pdf(*a.outcome->decomposition, *a.transform, a.circuit.measured);
            Matrix samples = sample_multi_batch_parallel(pdf, cfg, count);
            for (Eigen::Index r = 0; r < samples.rows(); r++) {
                for (Eigen::Index c = 0; c < samples.cols(); c++) {
                    out << (c == 0 ? "" : "\t") << format_double(samples(r, c));
                }
                out << "\n";
            }
        }
        return kExitOk;
    });
}

int run_compare(const CliRequest &req, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        double delta = req.delta_gkp.value_or(0.02);
        if (!(delta > 0.0) || !(req.grid_step > 0.0) || !(req.threshold > 0.0)) {
            throw Error(ErrorCode::Domain, "--delta-gkp, --grid-step and --threshold must be positive");
        }
        Circuit circ = load_circuit(req.circuit_path);
        if (circ.measured.size() != 1) {
            throw Error(ErrorCode::Unsupported,
                        "unsupported: compare needs exactly one measured mode (no multimode finitely-squeezed density)");
        }
        LinearQuadratureForm form = track_measurement_operator(circ, circ.measured[0]);
        MembershipVerdict verdict = rsp_check(form, policy(req));
        if (!verdict.accepted) {
            err << "not simulatable: " << verdict.reason << "\n";
            return kExitNotSimulatable;
        }
        CombPDF1D pdf = build_single_pdf(form, verdict);
        std::optional<size_t> active;
        for (size_t i = 0; i < verdict.per_mode.size(); i++) {
            if (verdict.per_mode[i].kind == ModeCase::ZeroCoefficient) {
                continue;
            }
            if (active) {
                throw Error(ErrorCode::Unsupported,
                            "unsupported: compare needs the measured quadrature to depend on a single input mode");
            }
            active = i;
        }
        if (!active) {
            throw Error(ErrorCode::Unsupported, "unsupported: measured quadrature is a constant");
        }
        double a = form.a[*active];
        double b = form.b[*active];
        double analytic = pdf.spacings[*active];
        WavefunctionSource source;
        double scale;
        if (verdict.per_mode[*active].kind == ModeCase::Case2) {
            scale = std::fabs(a);
            source = RealisticIdentitySource{delta, scale, kAutoTruncation};
        } else {
            // a = s cos(theta), b = -s sin(theta) with sin(theta) > 0.
            double s = b < 0 ? std::hypot(a, b) : -std::hypot(a, b);
            double theta = std::atan2(-b / s, a / s);
            scale = std::fabs(s);
            source = RealisticSource{realistic_params(delta, s, theta), kAutoTruncation};
        }
        double half_width = 4.0 * kSqrtPi * std::max(1.0, scale);
        std::vector<double> xs = make_grid(form.c - half_width, form.c + half_width, req.grid_step);
        GridPdf grid = density_grid_parallel(source, xs, form.c);
        std::vector<double> peaks = numeric_peaks(grid, 0.1);
        if (peaks.size() < 2) {
            throw Error(ErrorCode::EmptyGrid, "fewer than two peaks on the grid; reduce --grid-step");
        }
        std::vector<double> gaps;
        double worst = 0.0;
        for (size_t k = 1; k < peaks.size(); k++) {
            double gap = peaks[k] - peaks[k - 1];
            gaps.push_back(gap);
            worst = std::max(worst, std::fabs(gap - analytic) / analytic);
        }
        json report = {{"analytic_spacing", analytic},
                       {"numeric_gaps", gaps},
                       {"max_relative_error", worst},
                       {"delta_gkp", delta},
                       {"grid_step", req.grid_step},
                       {"threshold", req.threshold},
                       {"passed", worst < req.threshold}};
        out << report.dump() << "\n";
        return worst < req.threshold ? kExitOk : kExitThreshold;
    });
}

int run(const CliRequest &req, std::ostream &out, std::ostream &err) {
    if (req.subcommand == "check") {
        return run_check(req, out, err);
    }
    if (req.subcommand == "pdf") {
        return run_pdf(req, out, err);
    }
    if (req.subcommand == "sample") {
        return run_sample(req, out, err);
    }
    if (req.subcommand == "compare") {
        return run_compare(req, out, err);
    }
    err << "error: unknown subcommand '" << req.subcommand << "'\n";
    return kExitUsage;
}

}  // namespace gkpsim
