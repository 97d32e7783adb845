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

#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "qgeom/error.hpp"
#include "qgeom/perturbation.hpp"

namespace qgeom {
namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

StateFamily family(Case c, int l, int j, const InitialCoefficients& eta) {
  return StateFamily(CaseClass{c, l, j}, eta, 0.0, kDefaultBasePoint, kDefaultResonanceThreshold);
}

TEST(PerturbationAux, ResonanceThrows) {
  EXPECT_NO_THROW(perturbation_aux(kDefaultBasePoint));
  try {
    perturbation_aux({0.7, 0.3, 0.2, 1.1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Resonance);
  }
}

TEST(PerturbedMetric, AssembledIsBasePlusBetaCorrection) {
  const auto eta = default_coefficients(Case::C7);
  const auto pm = perturbed_metric_analytic(eta, kDefaultBasePoint, 1.0, 0.01);
  EXPECT_LT(max_abs(pm.assembled().g - (pm.base.g + 0.01 * Eigen::MatrixXd(pm.correction))), 1e-15);
  EXPECT_LT(max_abs(pm.base.g - analytic_metric_c7(eta, kDefaultBasePoint).g), 1e-15);
  EXPECT_EQ(pm.correction, pm.correction.transpose());
}

TEST(PerturbedMetric, ComponentTables) {
  const auto& names = perturbed_component_names();
  const auto& idx = perturbed_component_indices();
  EXPECT_EQ(names[0], "omega_omega");
  EXPECT_EQ(names[9], "c_plus_c3");
  EXPECT_EQ(idx[9][0], 3);
  EXPECT_EQ(idx[9][1], 2);
}

TEST(PerturbedMetric, AuditAgreesForUniformCoefficients) {
  for (const ChartPoint& x : {ChartPoint{0.7, 0.3, 0.9, 0.4}, ChartPoint{0.7, 0.3, 0.2, 0.4},
                              ChartPoint{1.3, -0.5, 0.1, -0.6}}) {
    for (const auto& a : audit_correction(default_coefficients(Case::C7), x)) {
      EXPECT_TRUE(a.agree) << a.name << " analytic " << a.analytic << " numeric " << a.numeric;
    }
  }
}

TEST(PerturbedMetric, PrintedCoefficientsNeedUnequalMagnitudeFix) {
  const ChartPoint x{0.7, 0.3, 0.9, 0.4};
  const auto eta_n = InitialCoefficients::normalized(
      {std::polar(0.6, 0.0), std::polar(0.4, 0.3), std::polar(0.6, -0.2), std::polar(0.3, 0.9)});
  for (const auto& a : audit_correction(eta_n, x)) {
    const bool expected = a.name != "phi_omega" && a.name != "c_plus_c3";
    EXPECT_EQ(a.agree, expected) << a.name;
  }
  for (const auto& a :
       audit_correction(eta_n, x, 1.0, 1e-3, 1e-3, 1e-6, FormulaVariant::Corrected)) {
    EXPECT_TRUE(a.agree) << a.name;
  }
}

TEST(PerturbedMetric, NumericMatchesAnalyticAtSmallBeta) {
  const auto eta = default_coefficients(Case::C7);
  const double beta = 1e-4;
  const StateFamily f(CaseClass{Case::C7, 0, 0}, eta, beta, kDefaultBasePoint,
                      kDefaultResonanceThreshold);
  const std::vector<double> xi{0.7, 0.3, 0.2, 0.4};
  const auto num = perturbed_metric_numeric(f, xi).g;
  const auto ana = perturbed_metric_analytic(eta, kDefaultBasePoint, 1.0, beta).assembled().g;
  EXPECT_LT(max_abs(num - ana), 1e-6);
}

TEST(PerturbedMetric, UnaffectedCasesHaveNoCorrection) {
  const double r = 1.0 / std::numbers::sqrt2;
  struct Item {
    Case c;
    int l, j;
    InitialCoefficients eta;
  };
  const Item items[] = {
      {Case::C1, 0, 0, default_coefficients(Case::C1)},
      {Case::C2, 1, 0, default_coefficients(Case::C2)},
      {Case::C3, 0, 0, default_coefficients(Case::C3)},
      {Case::C4, 1, 4, InitialCoefficients({r, 0.0, 0.0, r})},
      {Case::C4, 2, 4, InitialCoefficients({0.0, r, 0.0, r})},
  };
  for (const auto& it : items) {
    const auto f = family(it.c, it.l, it.j, it.eta);
    const auto xi = f.coordinates_of(f.base());
    EXPECT_LT(max_abs(numeric_metric_correction(f, xi)), 1e-9) << to_string(it.c);
  }
}

TEST(PerturbedMetric, TorusWithEta1AndEta3IsCorrected) {
  const auto f = family(Case::C4, 1, 3, default_coefficients(Case::C4));
  const auto xi = f.coordinates_of(f.base());
  EXPECT_GT(max_abs(numeric_metric_correction(f, xi)), 1e-2);
}

TEST(LinearFit, LeadingBehaviourIsLinear) {
  const double betas[] = {1e-4, 2e-4, 4e-4};
  const auto f = family_for(default_coefficients(Case::C7));
  const std::vector<double> xi{0.7, 0.3, 0.2, 0.4};
  const auto fit = fit_linear_response(f, xi, betas);
  EXPECT_LT(fit.worst_relative_residual, 1e-2);
  const auto h = perturbed_metric_analytic(default_coefficients(Case::C7), kDefaultBasePoint, 1.0,
                                           1.0)
                     .correction;
  EXPECT_LT(max_abs(fit.slope - Eigen::MatrixXd(h)), 1e-4);
}

}  // namespace
}  // namespace qgeom
