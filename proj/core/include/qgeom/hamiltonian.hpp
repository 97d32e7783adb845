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

#include <Eigen/Dense>

#include "qgeom/model.hpp"

namespace qgeom {

/// Amplitudes (a, b, c, d) of |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩.
using TwoQubitState = Eigen::Vector4cd;

/// A 4x4 complex matrix known to equal its conjugate transpose.
class HermitianMatrix4 {
 public:
  static constexpr double kTolerance = 1e-14;

  /// Throws Error(NonHermitian) if max |M - M^†| exceeds tol * max(1, |M|).
  explicit HermitianMatrix4(const Eigen::Matrix4cd& m, double tol = kTolerance);

  const Eigen::Matrix4cd& matrix() const { return m_; }

 private:
  Eigen::Matrix4cd m_;
};

/// Energies and matching eigenstates. Index k holds E_{k+1}, psi_{k+1}.
struct Spectrum {
  std::array<double, 4> energies{};
  std::array<TwoQubitState, 4> states{};
};

HermitianMatrix4 build_hamiltonian(const HamiltonianParams& p);

/// Unperturbed eigenvectors psi_1..psi_4 at angle phi. The ratios
/// cos(phi)/sqrt(1 -+ sin(phi)) are evaluated in the cancellation-free form
/// sgn(cos phi) sqrt(1 +- sin phi) near |sin phi| = 1, with sgn(0) = +1
/// (the limit taken from the cos(phi) > 0 side).
std::array<TwoQubitState, 4> unperturbed_eigenvectors(double phi);

/// Closed-form spectrum E = (c3+omega, c3-omega, -c3+c_plus, -c3-c_plus).
/// Ignores p.beta. Throws DegenerateChart when omega == 0.
Spectrum analytic_spectrum(const HamiltonianParams& p);

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm drops below this.
  double off_diagonal_tolerance = 1e-14;
  int max_sweeps = 64;
};

/// Cyclic complex Jacobi eigensolver. Energies ascending.
Spectrum numeric_spectrum(const HermitianMatrix4& h, const JacobiOptions& opts = {});

/// max_k ||H psi_k - E_k psi_k|| (states are normalized first).
double max_residual(const HermitianMatrix4& h, const Spectrum& s);

/// Max |<psi_i|psi_j> - delta_ij|.
double orthonormality_error(const Spectrum& s);

/// Label assignment of numeric eigenpairs to analytic labels. Within a
/// degenerate cluster (energies within `degeneracy_tol`) the analytic vector
/// is tested against the whole cluster subspace.
struct LabelMatch {
  std::array<int, 4> numeric_index{};
  /// |<numeric|analytic>| or, for degenerate clusters, the norm of the
  /// projection of the analytic vector onto the cluster.
  std::array<double, 4> overlap{};
  std::array<bool, 4> degenerate{};
  /// Max |E_analytic - E_numeric| after matching.
  double max_energy_error = 0.0;
};

LabelMatch match_labels(const Spectrum& analytic, const Spectrum& numeric,
                        double degeneracy_tol = 1e-9);

/// Resonance threshold rho for the energy denominators of the first-order
/// eigenvector corrections.
inline constexpr double kDefaultResonanceThreshold = 1e-6;

/// First-order corrected (unnormalized) eigenvectors at a chart point.
/// Throws Error(Resonance) when |2c3 +- omega - c_plus| < rho.
std::array<TwoQubitState, 4> perturbed_eigenvectors(
    const ChartPoint& x, double beta, double rho = kDefaultResonanceThreshold);

/// Unchanged energies with first-order eigenvectors, normalized.
Spectrum perturbed_eigenstates(const HamiltonianParams& p, double beta,
                               double rho = kDefaultResonanceThreshold);

}  // namespace qgeom
