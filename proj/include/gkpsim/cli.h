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

#ifndef GKPSIM_CLI_H
#define GKPSIM_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace gkpsim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotSimulatable = 2;
inline constexpr int kExitThreshold = 3;

struct CliRequest {
    std::string subcommand;
    std::string circuit_path;
    std::uint64_t seed = 0;
    std::int64_t count = 10;
    std::int64_t bound = 100;
    double tol = 1e-9;
    std::int64_t max_den = 1000000;
    bool strict_dsp = false;
    bool float_angles = false;
    std::optional<double> delta_gkp;
    double grid_step = 1e-3;
    double threshold = 0.02;
};

/// Membership verdict as JSON. Exit 0 accepted, 2 rejected, 1 on errors.
int run_check(const CliRequest &req, std::ostream &out, std::ostream &err);
/// Comb description as JSON. Exit 2 when the circuit is not simulatable.
int run_pdf(const CliRequest &req, std::ostream &out, std::ostream &err);
/// One sample per line, coordinates separated by tabs.
int run_sample(const CliRequest &req, std::ostream &out, std::ostream &err);
/// Peak gaps of the finitely-squeezed density against the comb spacing.
/// Exit 0 when max_relative_error < threshold, 3 when it is not.
int run_compare(const CliRequest &req, std::ostream &out, std::ostream &err);
/// Dispatches on req.subcommand.
int run(const CliRequest &req, std::ostream &out, std::ostream &err);

}  // namespace gkpsim

#endif
