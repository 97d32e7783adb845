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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qgeom/error.hpp"
#include "qgeom/fubini_study.hpp"

namespace qgeom {
namespace {

const Case kAllCases[] = {Case::C1, Case::C2, Case::C3, Case::C4, Case::C5, Case::C6, Case::C7};

InitialCoefficients random_eta(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  std::array<Complex, 4> e;
  for (auto& z : e) z = {n(rng), n(rng)};
  return InitialCoefficients::normalized(e);
}

InitialCoefficients generic_eta() {
  return InitialCoefficients::normalized(
      {Complex(0.5, 0.0), Complex(0.3, 0.2), Complex(0.6, 0.0), Complex(0.0, 0.4)});
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

TEST(NumericMetric, MatchesClosedFormAtRandomPoints) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0), uphi(-1.4, 1.4);
  for (int t = 0; t < 50; ++t) {
    const auto eta = random_eta(rng);
    const ChartPoint x{u(rng), uphi(rng), u(rng), u(rng)};
    const StateFamily f(CaseClass{Case::C7, 0, 0}, eta, 0.0, x, kDefaultResonanceThreshold);
    const std::vector<double> xi{x.omega, x.phi, x.c3, x.c_plus};
    const auto num = numeric_fs_metric(f, xi, 1.0, 1e-5);
    EXPECT_LT(max_abs(num.g - analytic_metric_c7(eta, x).g), 1e-6);
    EXPECT_TRUE(num.is_positive_semidefinite());
    EXPECT_EQ(num.max_asymmetry(), 0.0);
  }
}

TEST(ClosedFormMetric, UniformReference) {
  const auto g = analytic_metric_c7(default_coefficients(Case::C7), kDefaultBasePoint).g;
  EXPECT_NEAR(g(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(g(1, 1), 0.064305551854104442, 1e-14);
  EXPECT_NEAR(g(1, 2), 0.24636243249711504, 1e-14);
  EXPECT_NEAR(g(2, 2), 1.0, 1e-15);
  EXPECT_NEAR(g(3, 3), 0.5, 1e-15);
  EXPECT_NEAR(g(0, 3), 0.0, 1e-15);
}

TEST(ClosedFormMetric, ScalesWithGammaSquared) {
  const auto eta = generic_eta();
  const auto a = analytic_metric_c7(eta, kDefaultBasePoint, 1.0).g;
  const auto b = analytic_metric_c7(eta, kDefaultBasePoint, 3.0).g;
  EXPECT_LT(max_abs(b - 9.0 * a), 1e-13);
}

TEST(NumericMetric, CircleCase) {
  for (double gamma : {1.0, 2.0, 0.5}) {
    const auto f = family_for(default_coefficients(Case::C2));
    const std::vector<double> xi{0.3};
    EXPECT_NEAR(numeric_fs_metric(f, xi, gamma).g(0, 0), 0.25 * gamma * gamma, 1e-10);
  }
}

TEST(NumericMetric, StepOutOfRange) {
  const auto f = family_for(default_coefficients(Case::C7));
  const auto xi = f.coordinates_of(f.base());
  EXPECT_THROW(numeric_fs_metric(f, xi, 1.0, 1e-2), Error);
  EXPECT_THROW(numeric_fs_metric(f, xi, 1.0, 1e-9), Error);
}

TEST(NumericMetric, GaugeInvariantForEveryCase) {
  for (Case c : kAllCases) {
    const auto f = family_for(default_coefficients(c));
    const auto xi = f.coordinates_of(f.base());
    StateFunction rephased = [&f](std::span<const double> x) {
      double lam = 0.3;
      for (std::size_t k = 0; k < x.size(); ++k) lam += (1.0 + k) * x[k] * x[k];
      return TwoQubitState(std::polar(1.0, lam) * f(x));
    };
    const auto a = numeric_fs_metric(f, xi);
    const auto b = numeric_fs_metric(rephased, xi);
    EXPECT_LT(max_abs(a.g - b.g), 1e-8) << to_string(c);
  }
}

TEST(NumericMetric, FlatOnZeroFieldSlice) {
  // b = 0 freezes phi at 0; the remaining components do not move.
  const auto f = family_for(generic_eta());
  const std::vector<double> ref{0.2, 0.0, -0.5, 0.3};
  const auto g0 = numeric_fs_metric(f, ref).g;
  for (double w : {-1.0, 0.4, 1.9})
    for (double c3 : {-0.8, 0.6})
      for (double cp : {-1.2, 0.9}) {
        const std::vector<double> xi{w, 0.0, c3, cp};
        const auto g = numeric_fs_metric(f, xi).g;
        for (int a : {0, 2, 3})
          for (int b : {0, 2, 3}) EXPECT_NEAR(g(a, b), g0(a, b), 1e-9);
      }
}

TEST(Diagonalize, ReferenceTransform) {
  const auto t = diagonalize_metric(generic_eta(), 0.7);
  EXPECT_NEAR(t.k1, 2.2131897038648871, 1e-12);
  EXPECT_NEAR(t.k2, -0.63784872694637951, 1e-12);
  EXPECT_NEAR(t.k3, -0.21686075498459623, 1e-12);
  EXPECT_NEAR(t.k4, 0.35514018691588783, 1e-12);
  EXPECT_NEAR(t.J, -0.18312685976477017, 1e-12);
  EXPECT_NEAR(t.theta, 2.6208361101201083, 1e-12);
}

TEST(Diagonalize, PushforwardIsDiagonal) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 20; ++t) {
    const auto eta = random_eta(rng);
    const double w = u(rng);
    const auto tr = diagonalize_metric(eta, w);
    const auto pushed =
        pushforward(analytic_metric_c7(eta, {w, 0.3, 0.2, 0.4}), tr.jacobian(eta.eta12_plus()), {});
    const auto target = diagonal_metric_c7(eta, tr.theta);
    Eigen::MatrixXd off = pushed.g;
    off.diagonal().setZero();
    EXPECT_LT(max_abs(off), 1e-10);
    EXPECT_LT((pushed.g.diagonal() - target.g.diagonal()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Diagonalize, SingularWhenJStationary) {
  // eta2 = 0 freezes J.
  const auto eta = InitialCoefficients::normalized({0.6, 0.0, 0.8, 0.0});
  try {
    diagonalize_metric(eta, 0.7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularTransform);
  }
}

TEST(CaseMetric, DiagonalFormsMatchNumericPushforward) {
  for (Case c : kAllCases) {
    if (c == Case::C4) continue;
    const auto f = family_for(default_coefficients(c));
    const auto xi = f.coordinates_of(f.base());
    const auto closed = analytic_metric_case(f, xi);
    const auto pushed =
        pushforward(numeric_fs_metric(f, xi), case_diagonal_jacobian(f, xi), closed.chart);
    EXPECT_LT(max_abs(pushed.g - closed.g), 1e-6) << to_string(c);
  }
}

TEST(CaseMetric, TorusPhaseComponentIsNineTimesTheDirectValue) {
  const auto f = family_for(default_coefficients(Case::C4));
  const auto xi = f.coordinates_of(f.base());
  const auto closed = analytic_metric_case(f, xi);
  const auto num = numeric_fs_metric(f, xi);
  EXPECT_NEAR(num.g(0, 0), closed.g(0, 0), 1e-9);
  EXPECT_NEAR(closed.g(1, 1), 9.0 * num.g(1, 1), 1e-8);
}

TEST(CaseMetric, ReferenceDiagonals) {
  const auto f = family_for(default_coefficients(Case::C6));
  const auto g = analytic_metric_case(f, f.coordinates_of(f.base())).g;
  EXPECT_NEAR(g(0, 0), 0.125, 1e-14);
  EXPECT_NEAR(g(1, 1), 1.0, 1e-14);
  EXPECT_NEAR(g(2, 2), 0.5, 1e-14);
  const auto f3 = family_for(default_coefficients(Case::C3));
  EXPECT_NEAR(analytic_metric_case(f3, f3.coordinates_of(f3.base())).g(1, 1),
              0.0072222074164177428, 1e-14);
}

TEST(TwoParamMetric, Reference) {
  const auto m = two_param_metric(0.4, default_coefficients(Case::C7));
  ASSERT_EQ(m.dim(), 2u);
  EXPECT_NEAR(m.g(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(m.g(1, 1), 0.54, 1e-15);
  EXPECT_EQ(m.g(0, 1), 0.0);
}

}  // namespace
}  // namespace qgeom
