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

#include <gtest/gtest.h>

#include "qgeom/error.hpp"
#include "qgeom/model.hpp"

namespace qgeom {
namespace {

TEST(DeriveParams, ReferencePoint) {
  const DerivedParams d = derive_params({0.5, 0.8, 0.2, 0.3, 0.0});
  EXPECT_NEAR(d.omega, 1.1661903789690602, 1e-15);
  EXPECT_NEAR(d.phi, 1.0303768265243125, 1e-15);
  EXPECT_DOUBLE_EQ(d.c_plus, 1.0);
  EXPECT_NEAR(d.c_minus, 0.6, 1e-15);
  EXPECT_FALSE(d.degenerate);
}

TEST(DeriveParams, PhiRecoversTrigonometricForm) {
  for (double b : {-1.3, -0.2, 0.4, 1.7}) {
    for (double cm : {-0.9, 0.1, 1.2}) {
      const DerivedParams d = derive_params({b, cm, 0.0, 0.0, 0.0});
      EXPECT_NEAR(d.omega * std::sin(d.phi), 2.0 * b, 1e-14);
      EXPECT_NEAR(d.omega * std::cos(d.phi), cm, 1e-14);
    }
  }
}

TEST(DeriveParams, DegenerateWhenOmegaVanishes) {
  const DerivedParams d = derive_params({0.0, 0.4, 0.4, 0.1, 0.0});
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.phi, 0.0);
}

TEST(DeriveParams, RejectsNonFinite) {
  EXPECT_THROW(derive_params({NAN, 0, 0, 0, 0}), Error);
}

TEST(InitialCoefficients, RejectsUnnormalized) {
  try {
    InitialCoefficients({1.0, 1.0, 0.0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormalized);
  }
}

TEST(InitialCoefficients, NormalizedAndPolar) {
  const auto n = InitialCoefficients::normalized({1.0, 1.0, 1.0, 1.0});
  EXPECT_NEAR(n.abs2(0), 0.25, 1e-15);
  EXPECT_THROW(InitialCoefficients::normalized({0.0, 0.0, 0.0, 0.0}), Error);
  const auto p = InitialCoefficients::from_polar({0.5, 0.5, 0.5, 0.5}, {0.1, 0.4, -0.3, 1.0});
  EXPECT_NEAR(p.alpha(1, 2), -0.3, 1e-15);
  EXPECT_NEAR(p.alpha(4, 3), 1.3, 1e-15);
  EXPECT_NEAR(p.eta12_plus(), 0.5, 1e-15);
  EXPECT_THROW(p.alpha(0, 2), Error);
}

TEST(Classify, DefaultCoefficientsRoundTrip) {
  for (Case c : {Case::C1, Case::C2, Case::C3, Case::C4, Case::C5, Case::C6, Case::C7}) {
    const CaseClass cls = classify(default_coefficients(c));
    EXPECT_EQ(cls.id, c) << to_string(c);
    EXPECT_EQ(cls.dimension(), dimension(c));
  }
}

TEST(Classify, Labels) {
  const double r = 1.0 / std::numbers::sqrt2;
  EXPECT_EQ(classify(InitialCoefficients({0.0, r, 0.0, r})), (CaseClass{Case::C4, 2, 4}));
  EXPECT_EQ(classify(InitialCoefficients({0.0, 1.0, 0.0, 0.0})), (CaseClass{Case::C2, 2, 0}));
  EXPECT_EQ(classify(InitialCoefficients({0.5, 0.5, 0.0, r})).name(), "C5(j=4)");
}

TEST(Classify, Errors) {
  try {
    classify(InitialCoefficients({0.0, 0.0, 1.0, 0.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StationaryState);
  }
  const auto near = InitialCoefficients::normalized({1.0, 1.5e-12, 0.0, 0.0});
  try {
    classify(near);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbiguousClassification);
  }
  EXPECT_EQ(classify(near, 1e-9).id, Case::C2);
}

TEST(Dimension, PerCase) {
  EXPECT_EQ(dimension(Case::C1), 1);
  EXPECT_EQ(dimension(Case::C2), 1);
  EXPECT_EQ(dimension(Case::C3), 2);
  EXPECT_EQ(dimension(Case::C4), 2);
  EXPECT_EQ(dimension(Case::C5), 3);
  EXPECT_EQ(dimension(Case::C6), 3);
  EXPECT_EQ(dimension(Case::C7), 4);
  EXPECT_EQ(parse_case("C6"), Case::C6);
  EXPECT_THROW(parse_case("C8"), Error);
}

}  // namespace
}  // namespace qgeom
