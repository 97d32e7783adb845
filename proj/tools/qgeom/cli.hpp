// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace qgeom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitNumerical = 3;

Report cmd_spectrum(RunConfig& cfg);
Report cmd_classify(RunConfig& cfg);
Report cmd_evolve(RunConfig& cfg);
Report cmd_metric(RunConfig& cfg);
Report cmd_curvature(RunConfig& cfg);
Report cmd_perturb(RunConfig& cfg);
Report cmd_concurrence(RunConfig& cfg);
Report cmd_verify(RunConfig& cfg);

/// Parses args (without the program name), runs the subcommand and writes
/// the report to `out` or --out. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgeom::cli
