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

#include "gkpsim/json_io.h"

#include "overloaded.h"

namespace gkpsim {

using nlohmann::json;

json integer_to_json(const Integer &value) {
    if (value.fits_slong_p()) {
        return value.get_si();
    }
    return value.get_str();
}

json to_json(const ModeVerdict &mv) {
    json out = {{"mode", mv.mode}, {"case", mode_case_name(mv.kind)}};
    if (mv.kind == ModeCase::Case1) {
        out["u"] = integer_to_json(mv.u);
        out["v"] = integer_to_json(mv.v);
    }
    if (mv.kind != ModeCase::Rejected) {
        out["lattice_step"] = mv.lattice_step;
    } else {
        out["reason"] = mv.reason;
    }
    return out;
}

json to_json(const MembershipVerdict &verdict) {
    json modes = json::array();
    for (const ModeVerdict &mv : verdict.per_mode) {
        modes.push_back(to_json(mv));
    }
    return {{"accepted", verdict.accepted},
            {"class", verdict.accepted ? "A" : "none"},
            {"per_mode", modes},
            {"reason", verdict.reason}};
}

json to_json(const ThetaClass &cls) {
    return std::visit(overloaded{
                          [](const Case1 &c) -> json {
                              return {{"case", "case1"}, {"u", integer_to_json(c.u)}, {"v", integer_to_json(c.v)}};
                          },
                          [](const Case2 &) -> json { return {{"case", "case2"}}; },
                          [](const NotInTheta &n) -> json { return {{"case", "rejected"}, {"reason", n.reason}}; },
                      },
                      cls);
}

json to_json(const DspOutcome &outcome) {
    json modes = json::array();
    std::string reason;
    if (outcome.accepted()) {
        const DspDecomposition &dec = *outcome.decomposition;
        for (size_t i = 0; i < dec.classes.size(); i++) {
            json m = to_json(dec.classes[i]);
            m["mode"] = static_cast<int>(i + 1);
            m["theta"] = angle_str(dec.thetas[i]);
            modes.push_back(m);
        }
    } else {
        reason = std::string(dsp_reason_name(outcome.rejection->reason)) + ": " + outcome.rejection->detail;
    }
    return {{"accepted", outcome.accepted()},
            {"class", outcome.accepted() ? "B" : "none"},
            {"per_mode", modes},
            {"reason", reason}};
}

json to_json(const CombPDF1D &pdf) {
    json cases = json::array();
    for (const ModeVerdict &mv : pdf.cases) {
        json c = {{"mode", mv.mode}, {"case", mode_case_name(mv.kind)}};
        if (mv.kind == ModeCase::Case1) {
            c["u"] = integer_to_json(mv.u);
            c["v"] = integer_to_json(mv.v);
        }
        cases.push_back(c);
    }
    return {{"kind", "comb1d"}, {"spacings", pdf.spacings}, {"offset", pdf.offset}, {"cases", cases}};
}

json to_json(const CombPDFnD &pdf) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < pdf.matrix.rows(); r++) {
        json row = json::array();
        for (Eigen::Index c = 0; c < pdf.matrix.cols(); c++) {
            row.push_back(pdf.matrix(r, c));
        }
        rows.push_back(row);
    }
    std::vector<double> offsets(pdf.offsets.data(), pdf.offsets.data() + pdf.offsets.size());
    json cases = json::array();
    for (size_t i = 0; i < pdf.classes.size(); i++) {
        json c = to_json(pdf.classes[i]);
        c["mode"] = static_cast<int>(i + 1);
        cases.push_back(c);
    }
    return {{"kind", "combNd"}, {"matrix", rows}, {"offsets", offsets}, {"measured", pdf.measured}, {"cases", cases}};
}

}  // namespace gkpsim
