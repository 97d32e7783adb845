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

#include "qgeom/fubini_study.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgeom/error.hpp"

namespace qgeom {
namespace {

constexpr double kSingularTol = 1e-12;

// The C5/C6 diagonalizing relations are written for a phase coordinate half
// of the family's c (the family carries e^{ic}, the relations e^{2ic}).
constexpr double kPhaseScale = 2.0;

double j_value(const InitialCoefficients& eta, double omega) {
  return std::imag(eta.at(0) * std::conj(eta.at(1)) * std::polar(1.0, -2.0 * omega));
}

double dj_domega(const InitialCoefficients& eta, double omega) {
  return -2.0 * std::real(eta.at(0) * std::conj(eta.at(1)) * std::polar(1.0, -2.0 * omega));
}

std::vector<bool> degenerate_rows(const Eigen::MatrixXd& g, double gamma) {
  std::vector<bool> out(static_cast<std::size_t>(g.rows()));
  const double floor = 1e-10 * gamma * gamma;
  for (Eigen::Index r = 0; r < g.rows(); ++r) {
    out[static_cast<std::size_t>(r)] = g.row(r).cwiseAbs().maxCoeff() < floor;
  }
  return out;
}

MetricTensor make_metric(Eigen::MatrixXd g, double gamma, std::vector<Coord> chart) {
  MetricTensor m;
  m.degenerate_rows = degenerate_rows(g, gamma);
  m.g = std::move(g);
  m.gamma = gamma;
  m.chart = std::move(chart);
  return m;
}

// theta with J = (eta12+/2) cos theta, clamped against rounding.
double theta_of(const InitialCoefficients& eta, double omega) {
  const double p12 = eta.eta12_plus();
  if (p12 <= 0.0) throw Error(ErrorKind::SingularTransform, "eta12+ vanishes");
  const double c = std::clamp(2.0 * j_value(eta, omega) / p12, -1.0, 1.0);
  return std::acos(c);
}

}  // namespace

double MetricTensor::min_eigenvalue() const {
  if (g.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool MetricTensor::is_positive_semidefinite(double tol) const {
  return min_eigenvalue() >= -tol;
}

double MetricTensor::max_asymmetry() const {
  if (g.size() == 0) return 0.0;
  return (g - g.transpose()).cwiseAbs().maxCoeff();
}

MetricTensor numeric_fs_metric(const StateFamily& f, std::span<const double> xi, double gamma,
                               double h) {
  const StateFamily* fp = &f;
  StateFunction fn = [fp](std::span<const double> x) { return (*fp)(x); };
  return numeric_fs_metric(fn, xi, gamma, h, f.chart());
}

MetricTensor numeric_fs_metric(const StateFunction& f, std::span<const double> xi, double gamma,
                               double h, std::vector<Coord> chart) {
  if (!(h >= kMinMetricStep && h <= kMaxMetricStep)) {
    throw Error(ErrorKind::InvalidArgument,
                "metric step h = " + std::to_string(h) + " outside [1e-7, 1e-3]");
  }
  if (!(gamma > 0.0)) throw Error(ErrorKind::InvalidArgument, "gamma must be positive");
  const auto n = static_cast<Eigen::Index>(xi.size());
  std::vector<double> x(xi.begin(), xi.end());
  auto eval = [&](std::span<const double> at) -> TwoQubitState {
    TwoQubitState v = f(at);
    const double nrm = v.norm();
    if (!std::isfinite(nrm) || nrm == 0.0) {
      throw Error(ErrorKind::ChartSingularity, "state is not finite at the sample point");
    }
    return v / nrm;
  };

  const TwoQubitState psi = eval(x);
  std::vector<TwoQubitState> d(static_cast<std::size_t>(n));
  for (Eigen::Index mu = 0; mu < n; ++mu) {
    const auto k = static_cast<std::size_t>(mu);
    auto shifted = [&](double s) {
      std::vector<double> y = x;
      y[k] += s;
      return eval(y);
    };
    d[k] = (-shifted(2 * h) + 8.0 * shifted(h) - 8.0 * shifted(-h) + shifted(-2 * h)) /
           (12.0 * h);
    if (!d[k].allFinite()) {
      const std::string name =
          k < chart.size() ? std::string(to_string(chart[k])) : "#" + std::to_string(k);
      throw Error(ErrorKind::ChartSingularity, "non-finite derivative along " + name);
    }
  }

  Eigen::MatrixXd g(n, n);
  for (Eigen::Index mu = 0; mu < n; ++mu) {
    for (Eigen::Index nu = 0; nu < n; ++nu) {
      const auto& a = d[static_cast<std::size_t>(mu)];
      const auto& b = d[static_cast<std::size_t>(nu)];
      g(mu, nu) = gamma * gamma * std::real(a.dot(b) - a.dot(psi) * psi.dot(b));
    }
  }
  g = 0.5 * (g + g.transpose()).eval();
  return make_metric(std::move(g), gamma, std::move(chart));
}

MetricTensor analytic_metric_c7(const InitialCoefficients& eta, const ChartPoint& x,
                                double gamma) {
  const double p12 = eta.eta12_plus(), m12 = eta.eta12_minus();
  const double p34 = eta.eta34_plus(), m34 = eta.eta34_minus();
  const double J = j_value(eta, x.omega);
  Eigen::Matrix4d g;
  g(0, 0) = p12 - m12 * m12;
  g(0, 1) = m12 * J;
  g(0, 2) = 2.0 * m12 * p34;
  g(0, 3) = -m12 * m34;
  g(1, 1) = 0.25 * p12 - J * J;
  g(1, 2) = -2.0 * J * p34;
  g(1, 3) = J * m34;
  g(2, 2) = 4.0 * p12 * p34;
  g(2, 3) = -2.0 * p12 * m34;
  g(3, 3) = p34 - m34 * m34;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < r; ++c) g(r, c) = g(c, r);
  return make_metric(gamma * gamma * g, gamma,
                     {Coord::omega, Coord::phi, Coord::c3, Coord::c_plus});
}

Eigen::Matrix4d DiagonalizingTransform::jacobian(double /*eta12_plus*/) const {
  Eigen::Matrix4d L = Eigen::Matrix4d::Identity();
  L(1, 0) = k1;
  L(2, 0) = k2;
  L(2, 1) = k3;
  L(3, 2) = k4;
  if (!theta_substitution) return L;
  // omega' = omega(theta); only the first column picks up d omega / d theta.
  Eigen::Matrix4d T = Eigen::Matrix4d::Identity();
  T(0, 0) = domega_dtheta;
  return L * T;
}

DiagonalizingTransform diagonalize_metric(const InitialCoefficients& eta, double omega,
                                          bool theta_substitution) {
  const double p12 = eta.eta12_plus(), m12 = eta.eta12_minus();
  const double p34 = eta.eta34_plus(), m34 = eta.eta34_minus();
  DiagonalizingTransform t;
  t.theta_substitution = theta_substitution;
  t.J = j_value(eta, omega);
  t.dJ_domega = dj_domega(eta, omega);

  const double den12 = 4.0 * t.J * t.J - p12 * p12;
  if (std::abs(den12) < kSingularTol || p12 < kSingularTol) {
    throw Error(ErrorKind::SingularTransform, "transform singular: 4J^2 - (eta12+)^2 = 0");
  }
  t.k1 = 4.0 * m12 * t.J / den12;
  t.k2 = p12 * m12 / (2.0 * den12);
  t.k3 = t.J / (2.0 * p12);
  if (p34 > kSingularTol) {
    const double den34 = p34 - m34 * m34;
    if (std::abs(den34) < kSingularTol) {
      throw Error(ErrorKind::SingularTransform,
                  "transform singular: eta34+ - (eta34-)^2 = 0");
    }
    t.k4 = 2.0 * p12 * m34 / den34;
  }
  if (theta_substitution) {
    t.theta = theta_of(eta, omega);
    if (std::abs(t.dJ_domega) < kSingularTol) {
      throw Error(ErrorKind::SingularTransform, "transform singular: dJ/domega = 0");
    }
    t.domega_dtheta = -0.5 * p12 * std::sin(t.theta) / t.dJ_domega;
  }
  return t;
}

MetricTensor pushforward(const MetricTensor& m, const Eigen::MatrixXd& jacobian,
                         std::vector<Coord> new_chart) {
  if (jacobian.rows() != m.g.rows()) {
    throw Error(ErrorKind::InvalidArgument, "jacobian does not match metric dimension");
  }
  Eigen::MatrixXd g = jacobian.transpose() * m.g * jacobian;
  g = 0.5 * (g + g.transpose()).eval();
  return make_metric(std::move(g), m.gamma, std::move(new_chart));
}

MetricTensor diagonal_metric_c7(const InitialCoefficients& eta, double theta, double gamma) {
  const double p12 = eta.eta12_plus();
  const double p34 = eta.eta34_plus(), m34 = eta.eta34_minus();
  const double den34 = p34 - m34 * m34;
  if (std::abs(den34) < kSingularTol) {
    throw Error(ErrorKind::SingularTransform, "eta34+ - (eta34-)^2 = 0");
  }
  const double s = std::sin(theta);
  Eigen::Vector4d diag(0.25 * p12, 0.25 * p12 * s * s,
                       4.0 * p12 * (p34 * p34 - m34 * m34) / den34, den34);
  return make_metric(gamma * gamma * Eigen::Matrix4d(diag.asDiagonal()), gamma,
                     {Coord::theta, Coord::phi_prime, Coord::c3_prime, Coord::c_plus_prime});
}

MetricTensor analytic_metric_case(const StateFamily& f, std::span<const double> xi,
                                  double gamma) {
  if (xi.size() != f.dimension()) {
    throw Error(ErrorKind::UnsupportedChart, "coordinate vector does not match the chart");
  }
  const auto& eta = f.eta();
  const CaseClass cls = f.case_class();
  const double g2 = gamma * gamma;
  const double p12 = eta.eta12_plus();
  const double p34 = eta.eta34_plus(), m34 = eta.eta34_minus();
  const ChartPoint x = f.physical_point(xi);
  Eigen::MatrixXd g;
  std::vector<Coord> chart;
  switch (cls.id) {
    case Case::C1:
      g = Eigen::MatrixXd::Constant(1, 1, g2 * (p34 - m34 * m34));
      chart = {Coord::c_plus};
      break;
    case Case::C2:
      g = Eigen::MatrixXd::Constant(1, 1, 0.25 * g2 * p12);
      chart = {Coord::phi};
      break;
    case Case::C3: {
      const double s = std::sin(theta_of(eta, x.omega));
      g = Eigen::Vector2d(0.25 * p12, 0.25 * p12 * s * s).asDiagonal();
      g *= g2;
      chart = {Coord::theta, Coord::phi_prime};
      break;
    }
    case Case::C4: {
      const double al = eta.abs2(static_cast<std::size_t>(cls.l - 1));
      const double aj = eta.abs2(static_cast<std::size_t>(cls.j - 1));
      g = Eigen::Vector2d(0.25 * al, 9.0 * al * aj).asDiagonal();
      g *= g2;
      chart = {Coord::phi, Coord::c};
      break;
    }
    case Case::C5: {
      const double s = std::sin(theta_of(eta, x.omega));
      const double aj = eta.abs2(static_cast<std::size_t>(cls.j - 1));
      g = Eigen::Vector3d(0.25 * p12, 0.25 * p12 * s * s, 4.0 * p12 * aj).asDiagonal();
      g *= g2;
      chart = {Coord::theta, Coord::phi_prime, Coord::c_prime};
      break;
    }
    case Case::C6: {
      const double al = eta.abs2(static_cast<std::size_t>(cls.l - 1));
      const double den34 = p34 - m34 * m34;
      if (std::abs(den34) < kSingularTol) {
        throw Error(ErrorKind::SingularTransform, "eta34+ - (eta34-)^2 = 0");
      }
      g = Eigen::Vector3d(0.25 * al, 4.0 * al * (p34 * p34 - m34 * m34) / den34, den34)
              .asDiagonal();
      g *= g2;
      chart = {Coord::phi, Coord::c_prime, Coord::c_plus_prime};
      break;
    }
    case Case::C7:
      return diagonal_metric_c7(eta, theta_of(eta, x.omega), gamma);
  }
  return make_metric(std::move(g), gamma, std::move(chart));
}

Eigen::MatrixXd case_diagonal_jacobian(const StateFamily& f, std::span<const double> xi) {
  const auto& eta = f.eta();
  const CaseClass cls = f.case_class();
  const ChartPoint x = f.physical_point(xi);
  const auto n = static_cast<Eigen::Index>(f.dimension());
  Eigen::MatrixXd jac = Eigen::MatrixXd::Identity(n, n);
  switch (cls.id) {
    case Case::C1:
    case Case::C2:
    case Case::C4:
      break;
    case Case::C3: {
      const auto t = diagonalize_metric(eta, x.omega);
      jac(0, 0) = t.domega_dtheta;
      jac(1, 0) = t.k1 * t.domega_dtheta;
      break;
    }
    case Case::C5: {
      const auto t = diagonalize_metric(eta, x.omega);
      const double s = std::sin(t.theta);
      const double a = -eta.eta12_minus() / (2.0 * eta.eta12_plus() * s * s);
      jac(0, 0) = t.domega_dtheta;
      jac(1, 0) = t.k1 * t.domega_dtheta;
      jac(2, 0) = kPhaseScale * a * t.domega_dtheta;
      jac(2, 1) = kPhaseScale * 0.25 * std::cos(t.theta);
      jac(2, 2) = kPhaseScale;
      break;
    }
    case Case::C6: {
      const double al = eta.abs2(static_cast<std::size_t>(cls.l - 1));
      const double m34 = eta.eta34_minus();
      const double den34 = eta.eta34_plus() - m34 * m34;
      if (std::abs(den34) < kSingularTol) {
        throw Error(ErrorKind::SingularTransform, "eta34+ - (eta34-)^2 = 0");
      }
      jac(1, 1) = kPhaseScale;
      jac(2, 1) = 2.0 * al * m34 / den34;
      break;
    }
    case Case::C7:
      jac = diagonalize_metric(eta, x.omega).jacobian(eta.eta12_plus());
      break;
  }
  return jac;
}

MetricTensor two_param_metric(double alpha, const InitialCoefficients& eta, double gamma) {
  const double p12 = eta.eta12_plus(), m12 = eta.eta12_minus();
  const double p34 = eta.eta34_plus(), m34 = eta.eta34_minus();
  Eigen::Matrix2d g;
  g(0, 0) = p12 - m12 * m12;
  g(0, 1) = g(1, 0) = 2.0 * m12 * (alpha * p34 - m34);
  g(1, 1) = alpha * p12 * (alpha * p34 - 2.0 * m34) + (p34 - m34 * m34);
  return make_metric(gamma * gamma * g, gamma, {Coord::omega, Coord::c_plus});
}

}  // namespace qgeom
