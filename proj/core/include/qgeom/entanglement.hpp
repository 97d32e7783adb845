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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgeom/families.hpp"

namespace qgeom {

/// 2|ad - bc|. Throws NotNormalized if | |s|² - 1 | > 1e-10.
double concurrence(const TwoQubitState& s);

/// General closed form for the four-parameter evolved state.
double concurrence_general(const InitialCoefficients& eta, const ChartPoint& x);

/// Relative phase χ = arg(η_second) - arg(η_first) of the case's pair
/// (C1: η3, η4; C3: η1, η2; C4: η_l, η_j; C5: η1, η_j; C6: η_l, η3;
/// C7: η1, η3). Returns 0 for C2.
double relative_phase(const CaseClass& cls, const InitialCoefficients& eta);

/// Per-case closed-form concurrence at family coordinates `xi` (chart of
/// chart_for(cls.id)). Throws AssumptionViolated when the case's simplifying
/// equalities do not hold (C5: η1 = η2; C6: η3 = η4; C7: η1 = η2, η3 = η4).
/// Corrected uses cos(2c + 2χ) in C4 and sin 2ω in C5; the other cases have a
/// single form.
double concurrence_analytic(const CaseClass& cls, const InitialCoefficients& eta,
                            std::span<const double> xi,
                            FormulaVariant variant = FormulaVariant::Printed);

struct MaxEntangledCondition {
  Case case_id = Case::C7;
  std::string row;
  int n = 0;
  /// Family coordinates at which the row is evaluated.
  std::vector<double> coordinates;
  double concurrence = 0.0;
  bool passed = false;
};

/// Instantiates every tabulated maximal-entanglement row of C5/C6/C7 that
/// applies to `eta` (the parity of j for C5, of l for C6) for each n.
/// Unconstrained ω entries are sampled at 5 values. Failures are reported.
std::vector<MaxEntangledCondition> verify_max_entangled_tables(
    Case c, const InitialCoefficients& eta, std::span<const int> n_range,
    double tol = 1e-10);

/// Default n range {-1, 0, 1, 2}.
std::vector<MaxEntangledCondition> verify_max_entangled_tables(
    Case c, const InitialCoefficients& eta, double tol = 1e-10);

struct GridAxis {
  Coord coord = Coord::phi;
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  double at(int i) const;
};

using GridSpec = std::vector<GridAxis>;

struct ConcurrenceScan {
  CaseClass case_class;
  InitialCoefficients eta;
  GridSpec grid;
  std::vector<Coord> chart;
  double chi = 0.0;
  /// Full chart coordinates per sample, in chart order.
  std::vector<std::vector<double>> points;
  std::vector<double> values;
  std::size_t argmax = 0;
};

/// Dense scan; chart coordinates without an axis stay at the family base.
/// Throws InvalidArgument for axes not in the family chart.
ConcurrenceScan scan_concurrence(const StateFamily& f, const GridSpec& grid);

}  // namespace qgeom
