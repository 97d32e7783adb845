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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgeom/entanglement.hpp"
#include "qgeom/model.hpp"

namespace qgeom::cli {

enum class Format { Json, Csv };

/// Metric step under curvature stencils; second differences of a metric
/// sampled at 1e-5 are dominated by cancellation noise.
inline constexpr double kCurvatureMetricStep = 1e-3;

struct RunConfig {
  std::string command;
  HamiltonianParams params{0.5, 0.8, 0.2, 0.3, 0.0};
  bool params_given = false;
  std::string c_text;
  std::string eta_text;
  std::string case_text;
  std::string point_text;
  std::string grid_text;
  std::string suite = "all";
  std::string variant = "printed";
  double gamma = 1.0;
  double h_metric = 1e-5;
  /// Unset: curvature differentiates a metric sampled with kCurvatureMetricStep.
  bool h_metric_given = false;
  double h_curv = 1e-3;
  Format format = Format::Json;
  std::string out;
  std::uint64_t seed = 1;
  std::vector<std::string> warnings;
};

/// "re", "re+imj", "imj" or "mag@phase".
Complex parse_complex(const std::string& text);

std::vector<double> parse_doubles(const std::string& text);

/// Four comma-separated complex numbers, normalized with a warning when the
/// squared norm is off by more than 1e-9.
InitialCoefficients parse_eta(const std::string& text, std::vector<std::string>* warnings);

/// "name=a:b:n[,name=a:b:n...]".
GridSpec parse_grid(const std::string& text);

/// Fills params from --b/--c once CLI11 has stored the raw strings.
void resolve_params(RunConfig& cfg);

/// Coefficients from --eta, else the --case default, else uniform C7.
InitialCoefficients resolve_eta(RunConfig& cfg);

std::optional<Case> resolve_case(const RunConfig& cfg);

}  // namespace qgeom::cli
