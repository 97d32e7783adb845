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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qgeom/entanglement.hpp"
#include "qgeom/error.hpp"

namespace qgeom {
namespace {

constexpr double kPi = std::numbers::pi;

// Random coefficients of a given case, respecting the equalities the
// per-case closed forms assume.
InitialCoefficients random_case_eta(Case c, int l, int j, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.2, 1.0), ph(-kPi, kPi);
  auto z = [&] { return std::polar(mag(rng), ph(rng)); };
  std::array<Complex, 4> e{};
  switch (c) {
    case Case::C1: e = {0.0, 0.0, z(), z()}; break;
    case Case::C2: e[static_cast<std::size_t>(l - 1)] = z(); break;
    case Case::C3: e = {z(), z(), 0.0, 0.0}; break;
    case Case::C4:
      e[static_cast<std::size_t>(l - 1)] = z();
      e[static_cast<std::size_t>(j - 1)] = z();
      break;
    case Case::C5: {
      const Complex a = z();
      e = {a, a, 0.0, 0.0};
      e[static_cast<std::size_t>(j - 1)] = z();
      break;
    }
    case Case::C6: {
      const Complex a = z();
      e = {0.0, 0.0, a, a};
      e[static_cast<std::size_t>(l - 1)] = z();
      break;
    }
    case Case::C7: {
      const Complex a = z(), b = z();
      e = {a, a, b, b};
      break;
    }
  }
  return InitialCoefficients::normalized(e);
}

// Worst |closed form - 2|ad - bc|| over random points; phi keeps cos(phi) >= 0.
double worst_deviation(Case c, int l, int j, FormulaVariant variant) {
  std::mt19937_64 rng(100 + static_cast<int>(c) * 10 + l + j);
  std::uniform_real_distribution<double> u(-3.0, 3.0), uphi(-1.5, 1.5);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const auto eta = random_case_eta(c, l, j, rng);
    const ChartPoint base{u(rng), uphi(rng), u(rng), u(rng)};
    const StateFamily f(CaseClass{c, l, j}, eta, 0.0, base, kDefaultResonanceThreshold);
    const auto xi = f.coordinates_of(base);
    const auto s = f(xi);
    worst = std::max(worst, std::abs(concurrence(s / s.norm()) -
                                     concurrence_analytic(f.case_class(), eta, xi, variant)));
  }
  return worst;
}

TEST(Concurrence, BellAndProductStates) {
  const double r = 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(concurrence(TwoQubitState(r, 0, 0, r)), 1.0, 1e-15);
  EXPECT_NEAR(concurrence(TwoQubitState(0.5, 0.5, 0.5, 0.5)), 0.0, 1e-15);
  EXPECT_THROW(concurrence(TwoQubitState(1, 1, 0, 0)), Error);
}

TEST(Concurrence, ReferenceValue) {
  const auto s = evolved_state(default_coefficients(Case::C7), kDefaultBasePoint);
  EXPECT_NEAR(concurrence(s), 0.46134272836807227, 1e-14);
}

// The closed form takes sqrt(1 - sin^2 phi) as cos phi.
TEST(Concurrence, GeneralFormMatchesDirect) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> u(-3.0, 3.0), uphi(-1.5, 1.5);
  for (int t = 0; t < 200; ++t) {
    std::array<Complex, 4> e;
    for (auto& z : e) z = {n(rng), n(rng)};
    const auto eta = InitialCoefficients::normalized(e);
    const ChartPoint x{u(rng), uphi(rng), u(rng), u(rng)};
    EXPECT_NEAR(concurrence_general(eta, x), concurrence(evolved_state(eta, x)), 1e-12);
  }
}

TEST(ClosedForms, PrintedFormsHoldOutsideTorusAndC5) {
  EXPECT_LT(worst_deviation(Case::C1, 0, 0, FormulaVariant::Printed), 1e-10);
  EXPECT_LT(worst_deviation(Case::C2, 1, 0, FormulaVariant::Printed), 1e-10);
  EXPECT_LT(worst_deviation(Case::C2, 2, 0, FormulaVariant::Printed), 1e-10);
  EXPECT_LT(worst_deviation(Case::C3, 0, 0, FormulaVariant::Printed), 1e-10);
  for (int l : {1, 2}) EXPECT_LT(worst_deviation(Case::C6, l, 0, FormulaVariant::Printed), 1e-10);
  EXPECT_LT(worst_deviation(Case::C7, 0, 0, FormulaVariant::Printed), 1e-10);
}

TEST(ClosedForms, TorusAndC5NeedCorrections) {
  for (int l : {1, 2})
    for (int j : {3, 4}) {
      EXPECT_GT(worst_deviation(Case::C4, l, j, FormulaVariant::Printed), 1e-3);
      EXPECT_LT(worst_deviation(Case::C4, l, j, FormulaVariant::Corrected), 1e-10);
    }
  for (int j : {3, 4}) {
    EXPECT_GT(worst_deviation(Case::C5, 0, j, FormulaVariant::Printed), 1e-3);
    EXPECT_LT(worst_deviation(Case::C5, 0, j, FormulaVariant::Corrected), 1e-10);
  }
}

TEST(ClosedForms, AssumptionViolated) {
  const auto eta = InitialCoefficients::normalized({0.3, 0.5, 0.6, 0.0});
  const std::vector<double> xi{0.1, 0.2, 0.3};
  try {
    concurrence_analytic(classify(eta), eta, xi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AssumptionViolated);
  }
}

TEST(Tables, C6AndC7RowsAreMaximallyEntangled) {
  for (Case c : {Case::C6, Case::C7}) {
    const auto rows = verify_max_entangled_tables(c, default_coefficients(c));
    ASSERT_FALSE(rows.empty());
    for (const auto& r : rows) EXPECT_TRUE(r.passed) << r.row << " n=" << r.n;
  }
}

TEST(Tables, C5OddRowsFailForEta3) {
  int failed = 0;
  const auto rows = verify_max_entangled_tables(Case::C5, default_coefficients(Case::C5));
  for (const auto& r : rows) {
    if (r.passed) continue;
    ++failed;
    EXPECT_NE(r.row.find("j=odd"), std::string::npos) << r.row;
  }
  EXPECT_EQ(failed, 8);
}

TEST(Scan, CircleMaximumAtPhiZero) {
  const auto f = family_for(default_coefficients(Case::C2));
  const GridSpec grid{{Coord::phi, 0.0, 6.2832, 101}};
  const auto scan = scan_concurrence(f, grid);
  ASSERT_EQ(scan.values.size(), 101u);
  EXPECT_EQ(scan.argmax, 0u);
  EXPECT_NEAR(scan.values[0], 1.0, 1e-12);
  for (double v : scan.values) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0 + 1e-12);
  }
}

TEST(Scan, LastAxisVariesFastest) {
  const auto f = family_for(default_coefficients(Case::C3));
  const GridSpec grid{{Coord::omega, 0.0, 1.0, 2}, {Coord::phi, 0.0, 0.5, 3}};
  const auto scan = scan_concurrence(f, grid);
  ASSERT_EQ(scan.points.size(), 6u);
  EXPECT_DOUBLE_EQ(scan.points[1][1], 0.25);
  EXPECT_DOUBLE_EQ(scan.points[3][0], 1.0);
}

TEST(Scan, RejectsForeignAxis) {
  const auto f = family_for(default_coefficients(Case::C3));
  const GridSpec grid{{Coord::c3, 0.0, 1.0, 2}};
  EXPECT_THROW(scan_concurrence(f, grid), Error);
}

}  // namespace
}  // namespace qgeom
