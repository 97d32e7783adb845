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

#include <vector>

#include <gtest/gtest.h>

#include "qgeom/entanglement.hpp"
#include "qgeom/error.hpp"
#include "qgeom/families.hpp"

namespace qgeom {
namespace {

const Case kAllCases[] = {Case::C1, Case::C2, Case::C3, Case::C4, Case::C5, Case::C6, Case::C7};

TEST(EvolvedState, ReferenceAmplitudes) {
  const auto s = evolved_state(default_coefficients(Case::C7), kDefaultBasePoint);
  const Complex want[4] = {{0.510568624905132, -0.1729555800017426},
                           {0.63830606663161882, 0.12939104543229651},
                           {0.054705656574216388, -0.26987147645127768},
                           {-0.16869263664832612, -0.42538081873702205}};
  for (int k = 0; k < 4; ++k) EXPECT_LT(std::abs(s(k) - want[k]), 1e-14) << k;
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
}

TEST(EvolvedState, ZeroBetaOverloadAgrees) {
  const auto eta = InitialCoefficients::normalized(
      {Complex(0.3, 0.1), Complex(0.5, 0.0), Complex(0.2, -0.4), Complex(0.6, 0.2)});
  const ChartPoint x{1.1, -0.4, 0.3, -0.8};
  EXPECT_LT((evolved_state(eta, x) - evolved_state(eta, x, 0.0)).norm(), 1e-15);
}

TEST(StateFamily, ChartDimensions) {
  for (Case c : kAllCases) {
    const auto f = family_for(default_coefficients(c));
    EXPECT_EQ(static_cast<int>(f.dimension()), dimension(c));
    EXPECT_EQ(f.chart(), chart_for(c));
  }
}

TEST(StateFamily, MatchesEvolvedStateUpToPhase) {
  for (Case c : kAllCases) {
    const auto eta = default_coefficients(c);
    const auto f = family_for(eta);
    const auto xi = f.coordinates_of(f.base());
    const auto direct = evolved_state(eta, f.physical_point(xi));
    EXPECT_NEAR(std::abs(direct.dot(f(xi))), 1.0, 1e-12) << to_string(c);
  }
}

TEST(StateFamily, RejectsWrongCoordinateCount) {
  const auto f = family_for(default_coefficients(Case::C3));
  const std::vector<double> xi{0.1, 0.2, 0.3};
  EXPECT_THROW(f(xi), Error);
}

TEST(StateFamily, PerturbedStatesAreNormalized) {
  const auto f = family_for(default_coefficients(Case::C7), 1e-2);
  const std::vector<double> xi{0.7, 0.3, 0.2, 0.4};
  EXPECT_NEAR(f(xi).norm(), 1.0, 1e-14);
}

TEST(StateFamily, CaseMismatch) {
  try {
    family_for_case(CaseClass{Case::C3, 0, 0}, default_coefficients(Case::C7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CaseMismatch);
  }
}

TEST(Periodicity, AllConditionsHoldForEveryCase) {
  for (Case c : kAllCases) {
    const auto f = family_for(default_coefficients(c));
    const auto rep = check_periodicity(f, 3);
    ASSERT_FALSE(rep.checks.empty());
    for (const auto& chk : rep.checks) {
      EXPECT_LT(chk.max_phase_error, 1e-10) << to_string(c) << " " << chk.condition.label;
      EXPECT_EQ(chk.samples, 20);
    }
    EXPECT_TRUE(rep.all_passed());
  }
}

TEST(Periodicity, GenericCoefficients) {
  const auto eta = InitialCoefficients::normalized(
      {Complex(0.3, 0.1), Complex(0.5, 0.0), Complex(0.2, -0.4), Complex(0.6, 0.2)});
  EXPECT_TRUE(check_periodicity(family_for(eta), 9).all_passed());
}

TEST(Periodicity, RejectsPerturbedFamilies) {
  EXPECT_THROW(check_periodicity(family_for(default_coefficients(Case::C7), 1e-3)), Error);
}

TEST(Coord, NamesRoundTrip) {
  for (Coord c : {Coord::c_plus, Coord::phi, Coord::omega, Coord::c3, Coord::c, Coord::c_prime,
                  Coord::theta, Coord::phi_prime, Coord::c3_prime, Coord::c_plus_prime}) {
    EXPECT_EQ(parse_coord(to_string(c)), c);
  }
  EXPECT_THROW(parse_coord("zeta"), Error);
}

}  // namespace
}  // namespace qgeom
