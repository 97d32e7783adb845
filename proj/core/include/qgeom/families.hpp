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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgeom/hamiltonian.hpp"
#include "qgeom/model.hpp"

namespace qgeom {

/// Coordinate names used by the per-case charts and by the diagonalizing
/// coordinates (the primed names and theta).
enum class Coord {
  c_plus,
  phi,
  omega,
  c3,
  c,
  c_prime,
  theta,
  phi_prime,
  c3_prime,
  c_plus_prime,
};

std::string_view to_string(Coord c);
Coord parse_coord(std::string_view s);

/// Physical chart values used for coordinates a family does not vary and for
/// the perturbative energy denominators. Chosen off resonance.
inline constexpr ChartPoint kDefaultBasePoint{0.7, 0.3, 0.2, 0.4};

/// Evolved state e^{-i c3}(η1 e^{-iω}ψ1 + η2 e^{iω}ψ2 + η3 e^{i(2c3-c+)}ψ3
/// + η4 e^{i(2c3+c+)}ψ4).
TwoQubitState evolved_state(const InitialCoefficients& eta, const ChartPoint& x);

/// Same phase structure over first-order perturbed eigenvectors, renormalized.
TwoQubitState evolved_state(const InitialCoefficients& eta, const ChartPoint& x,
                            double beta,
                            double rho = kDefaultResonanceThreshold);

/// Parametrized family of evolved states for one case, in the chart of that
/// case. Immutable; evaluation is pure and thread-safe.
class StateFamily {
 public:
  StateFamily(CaseClass cls, InitialCoefficients eta, double beta,
              ChartPoint base, double rho);

  const CaseClass& case_class() const { return cls_; }
  const InitialCoefficients& eta() const { return eta_; }
  const std::vector<Coord>& chart() const { return chart_; }
  std::size_t dimension() const { return chart_.size(); }
  double beta() const { return beta_; }
  const ChartPoint& base() const { return base_; }
  double resonance_threshold() const { return rho_; }

  /// Throws InvalidArgument if xi.size() != dimension().
  TwoQubitState operator()(std::span<const double> xi) const;

  /// Chart coordinates of a physical chart point (computes the phase
  /// coordinate c where the case uses one).
  std::vector<double> coordinates_of(const ChartPoint& x) const;

  /// Physical point used for xi: chart entries that are physical coordinates
  /// override the base point; phase coordinates leave it untouched.
  ChartPoint physical_point(std::span<const double> xi) const;

  /// Same family with a different perturbation strength.
  StateFamily with_beta(double beta) const;

 private:
  std::array<TwoQubitState, 4> basis(const ChartPoint& x) const;

  CaseClass cls_;
  InitialCoefficients eta_;
  std::vector<Coord> chart_;
  double beta_;
  ChartPoint base_;
  double rho_;
};

/// Chart per case: C1 (c+), C2 (φ), C3 (ω, φ), C4 (φ, c), C5 (ω, φ, c),
/// C6 (φ, c, c+), C7 (ω, φ, c3, c+).
std::vector<Coord> chart_for(Case c);

/// Throws CaseMismatch if `cls` is not the classification of `eta`.
StateFamily family_for_case(const CaseClass& cls, const InitialCoefficients& eta,
                            double beta = 0.0,
                            const ChartPoint& base = kDefaultBasePoint,
                            double rho = kDefaultResonanceThreshold);

/// Classifies `eta` and builds its family.
StateFamily family_for(const InitialCoefficients& eta, double beta = 0.0,
                       const ChartPoint& base = kDefaultBasePoint);

struct PeriodicityCondition {
  std::string label;
  std::vector<double> shift;
  Complex phase;
};

/// The closure conditions ψ(ξ + P) = phase · ψ(ξ) of a case.
std::vector<PeriodicityCondition> periodicity_conditions(Case c);

struct PeriodicityCheck {
  PeriodicityCondition condition;
  int samples = 0;
  /// Min over samples of |<ψ(ξ)|ψ(ξ+P)>|^2.
  double min_fidelity = 1.0;
  /// Max over samples of |<ψ(ξ)|ψ(ξ+P)> - phase|.
  double max_phase_error = 0.0;
  bool passed = false;
};

struct PeriodicityReport {
  CaseClass case_class;
  std::vector<PeriodicityCheck> checks;
  bool all_passed() const;
};

/// Samples `samples` random base points per condition. Failures are
/// reported, not thrown. Requires beta == 0.
PeriodicityReport check_periodicity(const StateFamily& f, std::uint64_t seed = 1,
                                    int samples = 20, double tol = 1e-10);

}  // namespace qgeom
