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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qgeom/fubini_study.hpp"

namespace qgeom {

using MetricFunction = std::function<Eigen::MatrixXd(std::span<const double>)>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A smooth field of metric tensors. An empty domain means unbounded.
/// `evaluate` must be callable concurrently.
struct MetricField {
  std::size_t dim = 0;
  MetricFunction evaluate;
  std::vector<Interval> domain;
};

/// Numeric Fubini-Study metric of a family as a field.
MetricField metric_field(const StateFamily& f, double gamma = 1.0,
                         double h_metric = kDefaultMetricStep);

/// Multiplies every metric by a constant factor.
MetricField scaled(MetricField field, double factor);

/// Dense rank-3 array, index (a, b, c) -> (a * n + b) * n + c.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n, 0.0) {}
  double& operator()(std::size_t a, std::size_t b, std::size_t c) {
    return data_[(a * n_ + b) * n_ + c];
  }
  double operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * n_ + b) * n_ + c];
  }
  std::size_t dim() const { return n_; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Dense rank-4 array.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), data_(n * n * n * n, 0.0) {}
  double& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return data_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  double operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return data_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  std::size_t dim() const { return n_; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct CurvatureOptions {
  double h = 1e-3;
  /// Combine steps h and h/2 assuming an O(h^4) leading error.
  bool richardson = true;
  /// Metrics with min eigenvalue below this are rejected.
  double singular_tolerance = 1e-10;
};

/// Levi-Civita curvature at a point. Conventions:
///   Γ^ρ_{μν} = ½ g^{ρλ}(∂μ g_{λν} + ∂ν g_{λμ} - ∂λ g_{μν})
///   R^ρ_{σμν} = ∂μ Γ^ρ_{νσ} - ∂ν Γ^ρ_{μσ} + Γ^ρ_{μλ}Γ^λ_{νσ} - Γ^ρ_{νλ}Γ^λ_{μσ}
///   R_{σν} = R^ρ_{σρν},  R = g^{σν} R_{σν}
/// so a round 2-sphere of radius r has R = +2/r².
struct CurvatureReport {
  std::vector<double> point;
  Tensor3 christoffel;
  Tensor4 riemann;
  Eigen::MatrixXd ricci;
  Eigen::MatrixXd metric;
  double scalar = 0.0;
  double h = 0.0;
  double condition_number = 0.0;
  std::string note;

  std::size_t dim() const { return point.size(); }
  /// max |R^ρ_{σμν} + R^ρ_{σνμ}|
  double max_antisymmetry_violation() const;
  /// max |R^ρ_{σμν} + R^ρ_{μνσ} + R^ρ_{νσμ}|
  double max_bianchi_violation() const;
  double max_ricci_asymmetry() const;
};

/// Throws SingularMetric if the metric is not positive definite at xi and
/// DomainError if xi is closer than 2h to the boundary of the field domain.
CurvatureReport curvature_at(const MetricField& field, std::span<const double> xi,
                             const CurvatureOptions& opts = {});

/// Closed-form four-parameter metric for η1 = η2 = η3 = η4 = 1/2 in
/// (ω, φ, c3, c+), together with its Ricci tensor and R = 14/γ².
struct G0Result {
  MetricTensor metric;
  Eigen::Matrix4d ricci;
  double scalar = 0.0;
};

G0Result analytic_g0_and_ricci(double omega, double alpha12, double gamma = 1.0);

/// analytic_g0_and_ricci(...).metric as a field over (ω, φ, c3, c+).
MetricField g0_field(double alpha12, double gamma = 1.0);

/// The ten rational terms of the closed-form perturbed scalar curvature.
struct PerturbedCurvatureTerms {
  double A1 = 0, A2 = 0, B1 = 0, B2 = 0, C1 = 0, C2 = 0, D1 = 0, D2 = 0,
         E1 = 0, E2 = 0;
  double prefactor = 0;
};

PerturbedCurvatureTerms perturbed_curvature_terms(double omega, double beta,
                                                  double gamma = 1.0);

/// R(ω, β, γ) = cos 2ω / (γ²(cos 4ω + 1)²) · (A1/A2 + ... + E1/E2).
/// Throws DomainError naming the vanishing factor.
double perturbed_scalar_curvature_closed_form(double omega, double beta,
                                              double gamma = 1.0);

}  // namespace qgeom
