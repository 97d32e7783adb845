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

#include "qgeom/perturbation.hpp"

#include <cmath>

#include "qgeom/error.hpp"

namespace qgeom {
namespace {

double sqrt_one_minus_sin(double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  return s > 0.0 ? std::abs(c) / std::sqrt(1.0 + s) : std::sqrt(1.0 - s);
}

double sqrt_one_plus_sin(double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  return s < 0.0 ? std::abs(c) / std::sqrt(1.0 - s) : std::sqrt(1.0 + s);
}

}  // namespace

PerturbationAux perturbation_aux(const ChartPoint& x, double rho) {
  const double base = 2.0 * x.c3 - x.c_plus;
  const double dp = base + x.omega, dm = base - x.omega;
  if (std::abs(dp) < rho || std::abs(dm) < rho) {
    throw Error(ErrorKind::Resonance, "resonance: 2c3 - c+ +- omega within threshold of 0");
  }
  const double a = sqrt_one_minus_sin(x.phi), b = sqrt_one_plus_sin(x.phi);
  PerturbationAux aux;
  aux.y_plus = (a + b) / (dp * dp);
  aux.y_minus = (a - b) / (dm * dm);
  aux.x_plus = (a + b) / (dp * dm);
  aux.x_minus = (a - b) / (dp * dm);
  return aux;
}

MetricTensor PerturbedMetric::assembled() const {
  MetricTensor m = base;
  m.g = base.g + beta * Eigen::MatrixXd(correction);
  return m;
}

const std::array<std::string, 10>& perturbed_component_names() {
  static const std::array<std::string, 10> names = {
      "omega_omega", "c3_c3",    "c_plus_c_plus", "phi_phi",   "phi_omega",
      "c3_omega",    "c_plus_omega", "c3_phi",    "c_plus_phi", "c_plus_c3"};
  return names;
}

const std::array<std::array<int, 2>, 10>& perturbed_component_indices() {
  static const std::array<std::array<int, 2>, 10> idx = {
      {{0, 0}, {2, 2}, {3, 3}, {1, 1}, {1, 0}, {2, 0}, {3, 0}, {2, 1}, {3, 1}, {3, 2}}};
  return idx;
}

PerturbedMetric perturbed_metric_analytic(const InitialCoefficients& eta, const ChartPoint& x,
                                          double gamma, double beta, double rho,
                                          FormulaVariant variant) {
  PerturbedMetric out;
  out.base = analytic_metric_c7(eta, x, gamma);
  out.beta = beta;
  if (beta == 0.0) return out;

  const auto aux = perturbation_aux(x, rho);
  const double Yp = aux.y_plus, Ym = aux.y_minus, Xp = aux.x_plus, Xm = aux.x_minus;
  const double p12 = eta.eta12_plus(), m12 = eta.eta12_minus();
  const double p34 = eta.eta34_plus(), m34 = eta.eta34_minus();
  const double w = x.omega;
  const double J =
      std::imag(eta.at(0) * std::conj(eta.at(1)) * std::polar(1.0, -2.0 * w));
  const Complex P1 =
      eta.at(0) * std::conj(eta.at(2)) * std::polar(1.0, -(2.0 * x.c3 + w - x.c_plus));
  const Complex P2 =
      eta.at(1) * std::conj(eta.at(2)) * std::polar(1.0, -(2.0 * x.c3 - w - x.c_plus));
  const double I1 = P1.imag(), I2 = P2.imag(), R1 = P1.real(), R2 = P2.real();
  const double S = I1 * Yp + I2 * Ym;
  const double g2 = gamma * gamma;

  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  h(0, 0) = 2.0 * g2 * ((1 - 2 * m12) * I1 * Yp + (1 + 2 * m12) * I2 * Ym);
  h(2, 2) = -8.0 * g2 * (p12 - p34) * S;
  h(3, 3) = -2.0 * g2 * (1 - 2 * m34) * S;
  h(1, 1) = g2 * w * ((4 * J * I1 - R2) * Xm + (4 * J * I2 + R1) * Xp);
  const bool fixed = variant == FormulaVariant::Corrected;
  const double k12 = fixed ? 2 * m12 : m12;
  h(1, 0) = g2 * (w * (1 - k12) * I1 * Xm - w * (1 + k12) * I2 * Xp -
                  (0.5 * R1 + 2 * J * I2) * Ym - (0.5 * R2 - 2 * J * I1) * Yp);
  h(2, 0) = 4.0 * g2 * ((p34 - m12) * I1 * Yp - (p34 + m12) * I2 * Ym);
  h(3, 0) = 2.0 * g2 * ((m12 - m34) * I1 * Yp + (m12 + m34) * I2 * Ym);
  h(2, 1) = g2 * (-2 * w * (p12 - p34) * (I1 * Xm + I2 * Xp) + (R1 + 4 * J * I2) * Ym -
                  (R2 - 4 * J * I1) * Yp);
  h(3, 1) = g2 * (w * (1 - 2 * m34) * (I1 * Xm + I2 * Xp) - (0.5 * R1 + 2 * J * I2) * Ym +
                  (0.5 * R2 - 2 * J * I1) * Yp);
  h(3, 2) = 2.0 * g2 * (2 * p12 - (fixed ? 2 * m34 : m34)) * S;
  for (int r = 0; r < 4; ++r)
    for (int c = r + 1; c < 4; ++c) h(r, c) = h(c, r);
  out.correction = h;
  return out;
}

MetricTensor perturbed_metric_numeric(const StateFamily& f, std::span<const double> xi,
                                      double gamma, double h) {
  return numeric_fs_metric(f, xi, gamma, h);
}

Eigen::MatrixXd numeric_metric_correction(const StateFamily& f, std::span<const double> xi,
                                          double gamma, double beta_probe, double h) {
  auto central = [&](double b) -> Eigen::MatrixXd {
    const auto gp = numeric_fs_metric(f.with_beta(b), xi, gamma, h).g;
    const auto gm = numeric_fs_metric(f.with_beta(-b), xi, gamma, h).g;
    return (gp - gm) / (2.0 * b);
  };
  // Richardson over {b, b/2} removes the O(b^2) term.
  return (4.0 * central(0.5 * beta_probe) - central(beta_probe)) / 3.0;
}

std::vector<ComponentAudit> audit_correction(const InitialCoefficients& eta,
                                             const ChartPoint& x, double gamma,
                                             double rel_tol, double beta_probe,
                                             double floor, FormulaVariant variant) {
  const auto analytic =
      perturbed_metric_analytic(eta, x, gamma, 1.0, kDefaultResonanceThreshold, variant).correction;
  const StateFamily f(CaseClass{Case::C7, 0, 0}, eta, 0.0, x, kDefaultResonanceThreshold);
  const std::vector<double> xi = {x.omega, x.phi, x.c3, x.c_plus};
  const auto numeric = numeric_metric_correction(f, xi, gamma, beta_probe);

  std::vector<ComponentAudit> out;
  const auto& names = perturbed_component_names();
  const auto& idx = perturbed_component_indices();
  for (std::size_t k = 0; k < names.size(); ++k) {
    ComponentAudit a;
    a.name = names[k];
    a.analytic = analytic(idx[k][0], idx[k][1]);
    a.numeric = numeric(idx[k][0], idx[k][1]);
    a.abs_error = std::abs(a.analytic - a.numeric);
    a.rel_error = a.abs_error / std::max(std::abs(a.numeric), floor);
    a.agree = a.abs_error <= floor || a.rel_error <= rel_tol;
    out.push_back(a);
  }
  return out;
}

LinearityFit fit_linear_response(const StateFamily& f, std::span<const double> xi,
                                 std::span<const double> betas, double gamma, double h,
                                 double slope_floor) {
  if (betas.empty()) throw Error(ErrorKind::InvalidArgument, "no beta samples");
  const auto n = static_cast<Eigen::Index>(f.dimension());
  // Odd part in beta: the even O(beta^2) response cancels, leaving the
  // first-order term plus O(beta^3).
  std::vector<Eigen::MatrixXd> odd;
  double sbb = 0.0;
  Eigen::MatrixXd sbd = Eigen::MatrixXd::Zero(n, n);
  for (double b : betas) {
    const auto gp = numeric_fs_metric(f.with_beta(b), xi, gamma, h).g;
    const auto gm = numeric_fs_metric(f.with_beta(-b), xi, gamma, h).g;
    odd.push_back(0.5 * (gp - gm));
    sbb += b * b;
    sbd += b * odd.back();
  }
  LinearityFit fit;
  fit.slope = sbd / sbb;
  fit.max_relative_residual = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const double b = betas[k];
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) {
        const double s = fit.slope(r, c);
        const double res =
            std::abs(odd[k](r, c) - s * b) / std::max(std::abs(s * b), 1e-300);
        fit.max_relative_residual(r, c) = std::max(fit.max_relative_residual(r, c), res);
      }
  }
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      if (std::abs(fit.slope(r, c)) > slope_floor) {
        fit.worst_relative_residual =
            std::max(fit.worst_relative_residual, fit.max_relative_residual(r, c));
      }
  return fit;
}

}  // namespace qgeom
