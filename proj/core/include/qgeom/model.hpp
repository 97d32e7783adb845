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
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

namespace qgeom {

using Complex = std::complex<double>;

/// Couplings of b(σz⊗1 + 1⊗σz) + Σ c_j σj⊗σj + β(σx⊗1 + 1⊗σx).
/// All quantities are dimensionless.
struct HamiltonianParams {
  double b = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double beta = 0.0;
};

/// Chart quantities derived from the couplings. phi is the full-quadrant
/// angle with (c_minus, 2b) = omega * (cos phi, sin phi).
struct DerivedParams {
  double omega = 0.0;
  double phi = 0.0;
  double c_plus = 0.0;
  double c_minus = 0.0;
  /// omega == 0: phi carries no information and is reported as 0.
  bool degenerate = false;
};

DerivedParams derive_params(const HamiltonianParams& p);

/// A point of the four-dimensional evolution chart (omega, phi, c3, c_plus).
struct ChartPoint {
  double omega = 0.0;
  double phi = 0.0;
  double c3 = 0.0;
  double c_plus = 0.0;
};

/// Chart point reached by evolving with the given couplings.
ChartPoint chart_point(const HamiltonianParams& p);

/// Expansion coefficients of the initial state in the unperturbed
/// eigenbasis. Always normalized.
class InitialCoefficients {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws Error(NotNormalized) unless sum |eta_k|^2 == 1 within tol.
  explicit InitialCoefficients(const std::array<Complex, 4>& eta,
                               double tol = kNormTolerance);

  /// Rescales to unit norm. Throws on the zero vector.
  static InitialCoefficients normalized(const std::array<Complex, 4>& eta);

  /// Magnitudes and phases: eta_k = r_k e^{i alpha_k}.
  static InitialCoefficients from_polar(const std::array<double, 4>& magnitude,
                                        const std::array<double, 4>& phase);

  /// Zero-based access: at(0) is eta_1.
  const Complex& at(std::size_t k) const { return eta_[k]; }
  const std::array<Complex, 4>& values() const { return eta_; }

  double abs2(std::size_t k) const { return std::norm(eta_[k]); }
  double phase(std::size_t k) const { return std::arg(eta_[k]); }

  double eta12_plus() const { return abs2(0) + abs2(1); }
  double eta12_minus() const { return abs2(0) - abs2(1); }
  double eta34_plus() const { return abs2(2) + abs2(3); }
  double eta34_minus() const { return abs2(2) - abs2(3); }

  /// alpha_i - alpha_j with one-based labels, e.g. alpha(1, 2).
  double alpha(int i, int j) const;

 private:
  std::array<Complex, 4> eta_;
};

/// Selects between a closed form as published and the corrected expression
/// the numeric oracle demands (see the individual functions).
enum class FormulaVariant {
  Printed,
  Corrected,
};

enum class Case { C1, C2, C3, C4, C5, C6, C7 };

/// Zero-pattern class of the initial coefficients. For C2/C4/C6 `l` is the
/// nonzero index in {1, 2}; for C4/C5 `j` is the nonzero index in {3, 4}.
/// Unused indices are 0.
struct CaseClass {
  Case id = Case::C7;
  int l = 0;
  int j = 0;

  int dimension() const;
  std::string name() const;
  friend bool operator==(const CaseClass&, const CaseClass&) = default;
};

int dimension(Case c);
std::string_view to_string(Case c);
/// Parses "C1".."C7" (case-insensitive). Throws InvalidArgument.
Case parse_case(std::string_view s);

/// Coefficients with |eta| <= tol count as zero, those above 2*tol as
/// nonzero; anything in between is rejected as ambiguous.
CaseClass classify(const InitialCoefficients& eta, double tol = 1e-12);

/// Representative normalized coefficients for a case (used when only a case
/// label is given).
InitialCoefficients default_coefficients(Case c);

}  // namespace qgeom
