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

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qgeom/families.hpp"

namespace qgeom {

/// Symmetric real metric g_{μν} in a labelled chart, scaled by gamma^2.
struct MetricTensor {
  Eigen::MatrixXd g;
  double gamma = 1.0;
  std::vector<Coord> chart;
  /// Rows whose entries are all ~0: that coordinate does not move the ray.
  std::vector<bool> degenerate_rows;

  std::size_t dim() const { return static_cast<std::size_t>(g.rows()); }
  double min_eigenvalue() const;
  bool is_positive_semidefinite(double tol = 1e-9) const;
  double max_asymmetry() const;
};

using StateFunction = std::function<TwoQubitState(std::span<const double>)>;

inline constexpr double kDefaultMetricStep = 1e-5;
inline constexpr double kMinMetricStep = 1e-7;
inline constexpr double kMaxMetricStep = 1e-3;

/// g_{μν} = γ² Re(<∂μψ|∂νψ> - <∂μψ|ψ><ψ|∂νψ>) from fourth-order central
/// differences of the family. Symmetrized. Throws InvalidArgument if h is
/// outside [1e-7, 1e-3] and ChartSingularity on non-finite derivatives.
MetricTensor numeric_fs_metric(const StateFamily& f, std::span<const double> xi,
                               double gamma = 1.0, double h = kDefaultMetricStep);

/// Same for an arbitrary state-valued function of `xi.size()` coordinates.
/// The state need not be normalized.
MetricTensor numeric_fs_metric(const StateFunction& f, std::span<const double> xi,
                               double gamma = 1.0, double h = kDefaultMetricStep,
                               std::vector<Coord> chart = {});

/// Closed-form metric of the four-parameter family in (ω, φ, c3, c+),
/// with J = Im(η1 η2* e^{-2iω}).
MetricTensor analytic_metric_c7(const InitialCoefficients& eta, const ChartPoint& x,
                                double gamma = 1.0);

/// Linear change of variables
///   ω = ω', φ = k1 ω' + φ', c3 = k2 ω' + k3 φ' + c3', c+ = k4 c3' + c+'
/// that diagonalizes analytic_metric_c7 at a given ω, optionally followed by
/// J = (η12⁺/2) cos θ which trades ω' for θ.
struct DiagonalizingTransform {
  double k1 = 0.0;
  double k2 = 0.0;
  double k3 = 0.0;
  double k4 = 0.0;
  double J = 0.0;
  /// dJ/dω at the expansion point.
  double dJ_domega = 0.0;
  /// dω/dθ from J = (η₁₂⁺/2) cos θ; 1 without the substitution.
  double domega_dtheta = 1.0;
  double theta = 0.0;
  bool theta_substitution = true;

  /// ∂(ω, φ, c3, c+)/∂(θ or ω', φ', c3', c+').
  Eigen::Matrix4d jacobian(double eta12_plus) const;
};

/// Throws SingularTransform when 4J² - (η12⁺)² or η34⁺ - (η34⁻)² vanishes,
/// or (with theta substitution) when dJ/dω = 0.
DiagonalizingTransform diagonalize_metric(const InitialCoefficients& eta, double omega,
                                          bool theta_substitution = true);

/// Congruence J^T g J with relabelled chart.
MetricTensor pushforward(const MetricTensor& m, const Eigen::MatrixXd& jacobian,
                         std::vector<Coord> new_chart);

/// Diagonal metric in (θ, φ', c3', c+').
MetricTensor diagonal_metric_c7(const InitialCoefficients& eta, double theta,
                                double gamma = 1.0);

/// Per-case closed form, expressed in the case's diagonal chart (listed in
/// the returned `chart`): C1 (c+), C2 (φ), C3 (θ, φ'), C4 (φ, c),
/// C5 (θ, φ', c'), C6 (φ, c', c+'), C7 (θ, φ', c3', c+'). θ is evaluated
/// from the family point.
MetricTensor analytic_metric_case(const StateFamily& f, std::span<const double> xi,
                                  double gamma = 1.0);

/// Jacobian ∂(family chart)/∂(diagonal chart of analytic_metric_case) at xi.
/// Pushing numeric_fs_metric through it gives a tensor comparable to
/// analytic_metric_case.
Eigen::MatrixXd case_diagonal_jacobian(const StateFamily& f, std::span<const double> xi);

/// Metric in (ω, c+) of the slice c1 = c2, c3 = α c+/2 (φ = π/2).
MetricTensor two_param_metric(double alpha, const InitialCoefficients& eta,
                              double gamma = 1.0);

}  // namespace qgeom
