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

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qgeom/fubini_study.hpp"

namespace qgeom {

/// Y± = (√(1-sinφ) ± √(1+sinφ)) / (2c3 - c+ ± ω)²
/// X± = (√(1-sinφ) ± √(1+sinφ)) / ((2c3 - c+)² - ω²)
struct PerturbationAux {
  double y_plus = 0.0;
  double y_minus = 0.0;
  double x_plus = 0.0;
  double x_minus = 0.0;
};

/// Throws Resonance when |2c3 - c+ ± ω| < rho.
PerturbationAux perturbation_aux(const ChartPoint& x,
                                 double rho = kDefaultResonanceThreshold);

/// g = base + beta * correction, all in (ω, φ, c3, c+).
struct PerturbedMetric {
  MetricTensor base;
  Eigen::Matrix4d correction = Eigen::Matrix4d::Zero();
  double beta = 0.0;

  MetricTensor assembled() const;
};

/// Names of the ten independent components in the order they are audited.
const std::array<std::string, 10>& perturbed_component_names();
/// (row, col) in the (ω, φ, c3, c+) chart for each audited component.
const std::array<std::array<int, 2>, 10>& perturbed_component_indices();

/// Closed-form first-order metric. beta == 0 returns the unperturbed metric
/// with a zero correction without touching the resonance check. Corrected
/// uses ω(1 ∓ 2η₁₂⁻) in h_φω and 4(η₁₂⁺ - η₃₄⁻) in h_c₊c₃; the printed
/// coefficients only hold for η₁₂⁻ = 0 and η₃₄⁻ = 0 respectively.
PerturbedMetric perturbed_metric_analytic(const InitialCoefficients& eta,
                                          const ChartPoint& x, double gamma,
                                          double beta,
                                          double rho = kDefaultResonanceThreshold,
                                          FormulaVariant variant = FormulaVariant::Printed);

/// Numeric FS metric of a (possibly perturbed) family.
MetricTensor perturbed_metric_numeric(const StateFamily& f, std::span<const double> xi,
                                      double gamma = 1.0,
                                      double h = kDefaultMetricStep);

/// dg/dβ at β = 0 from symmetric quotients (g(β) - g(-β)) / 2β of the
/// numeric metric, Richardson-combined over β and β/2. The family's own beta
/// is ignored.
Eigen::MatrixXd numeric_metric_correction(const StateFamily& f,
                                          std::span<const double> xi,
                                          double gamma = 1.0, double beta_probe = 1e-3,
                                          double h = 1e-3);

struct ComponentAudit {
  std::string name;
  double analytic = 0.0;
  double numeric = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  bool agree = false;
};

/// Compares the closed-form correction h_ij against the numeric dg/dβ of the
/// four-parameter perturbed family at one chart point. A component agrees
/// when |analytic - numeric| <= floor or the error relative to
/// max(|numeric|, floor) is at most rel_tol.
std::vector<ComponentAudit> audit_correction(const InitialCoefficients& eta,
                                             const ChartPoint& x, double gamma = 1.0,
                                             double rel_tol = 1e-3,
                                             double beta_probe = 1e-3,
                                             double floor = 1e-6,
                                             FormulaVariant variant = FormulaVariant::Printed);

/// Least-squares slope of g(β) - g(0) through the origin, per component,
/// and the worst relative residual max_k |Δg(β_k) - s β_k| / (|s| β_k).
struct LinearityFit {
  Eigen::MatrixXd slope;
  Eigen::MatrixXd max_relative_residual;
  /// Largest relative residual over components whose slope exceeds the
  /// significance floor.
  double worst_relative_residual = 0.0;
};

LinearityFit fit_linear_response(const StateFamily& f, std::span<const double> xi,
                                 std::span<const double> betas, double gamma = 1.0,
                                 double h = 1e-3, double slope_floor = 1e-4);

}  // namespace qgeom
