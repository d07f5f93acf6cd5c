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

#include <CLI11.hpp>
#include <iostream>

#include "gkpsim/cli.h"

int main(int argc, char **argv) {
    gkpsim::CliRequest req;
    CLI::App app{"Decide simulatability of Gaussian circuits on GKP inputs, build outcome combs and sample them."};
    app.add_option("command", req.subcommand, "check | pdf | sample | compare")
        ->required()
        ->check(CLI::IsMember({"check", "pdf", "sample", "compare"}));
    app.add_option("circuit", req.circuit_path, "Circuit file")->required();
    app.add_option("--seed", req.seed, "Sampling seed");
    app.add_option("--count", req.count, "Number of samples");
    app.add_option("--bound", req.bound, "Lattice integers are drawn from [-bound, bound]");
    app.add_option("--tol", req.tol, "Tolerance for rational reconstruction of floating-point values");
    app.add_option("--max-den", req.max_den, "Largest denominator for rational reconstruction");
    app.add_flag("--strict-dsp", req.strict_dsp, "Also require a symmetric Atilde in the multimode test");
    app.add_flag("--float-angles", req.float_angles, "Allow rational reconstruction of floating-point angles");
    app.add_option("--delta-gkp", req.delta_gkp, "Finite-squeezing parameter for compare");
    app.add_option("--grid-step", req.grid_step, "Grid step for compare");
    app.add_option("--threshold", req.threshold, "Largest accepted relative gap error for compare");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return gkpsim::kExitUsage;
    }
    return gkpsim::run(req, std::cout, std::cerr);
}
