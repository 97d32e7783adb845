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

#include "qgeom/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qgeom/error.hpp"

namespace qgeom {
namespace {

using Mat2 = Eigen::Matrix2cd;

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix4cd kron(const Mat2& a, const Mat2& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

// Sign of cos(phi) with values within rounding of zero mapped to +1, so that
// phi = pi/2 and phi = 5pi/2 (or -pi/2 and 3pi/2) evaluate identically.
double sign_plus(double x) { return x >= -1e-15 ? 1.0 : -1.0; }

struct PhiTerms {
  double r1;         // cos(phi) / sqrt(1 - sin(phi))
  double r2;         // cos(phi) / sqrt(1 + sin(phi))
  double sqrt_om;    // sqrt(1 - sin(phi))
  double sqrt_op;    // sqrt(1 + sin(phi))
};

PhiTerms phi_terms(double phi) {
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  // 1 -+ sin(phi) = cos^2(phi) / (1 +- sin(phi)) avoids cancellation.
  const double om = s > 0.0 ? c * c / (1.0 + s) : 1.0 - s;
  const double op = s < 0.0 ? c * c / (1.0 - s) : 1.0 + s;
  PhiTerms t{};
  t.sqrt_om = std::sqrt(om);
  t.sqrt_op = std::sqrt(op);
  t.r1 = s > 0.5 ? sign_plus(c) * t.sqrt_op : c / t.sqrt_om;
  t.r2 = s < -0.5 ? sign_plus(c) * t.sqrt_om : c / t.sqrt_op;
  return t;
}

}  // namespace

HermitianMatrix4::HermitianMatrix4(const Eigen::Matrix4cd& m, double tol) : m_(m) {
  if (!m.allFinite()) throw Error(ErrorKind::NonHermitian, "matrix has non-finite entries");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol * scale) {
    throw Error(ErrorKind::NonHermitian,
                "matrix differs from its adjoint by " + std::to_string(asym));
  }
}

HermitianMatrix4 build_hamiltonian(const HamiltonianParams& p) {
  derive_params(p);  // finiteness check
  const Mat2 id = Mat2::Identity();
  const Mat2 x = pauli_x(), y = pauli_y(), z = pauli_z();
  Eigen::Matrix4cd h = p.b * (kron(z, id) + kron(id, z)) + p.c1 * kron(x, x) +
                       p.c2 * kron(y, y) + p.c3 * kron(z, z);
  if (p.beta != 0.0) h += p.beta * (kron(x, id) + kron(id, x));
  return HermitianMatrix4(h);
}

std::array<TwoQubitState, 4> unperturbed_eigenvectors(double phi) {
  const PhiTerms t = phi_terms(phi);
  const double r = 1.0 / std::numbers::sqrt2;
  std::array<TwoQubitState, 4> v;
  v[0] << r * t.r1, 0, 0, r * t.sqrt_om;
  v[1] << r * t.r2, 0, 0, -r * t.sqrt_op;
  v[2] << 0, r, r, 0;
  v[3] << 0, r, -r, 0;
  return v;
}

Spectrum analytic_spectrum(const HamiltonianParams& p) {
  const DerivedParams d = derive_params(p);
  if (d.degenerate) {
    throw Error(ErrorKind::DegenerateChart,
                "omega = 0 (b = 0 and c1 = c2): phi is undefined");
  }
  Spectrum s;
  s.energies = {p.c3 + d.omega, p.c3 - d.omega, -p.c3 + d.c_plus, -p.c3 - d.c_plus};
  s.states = unperturbed_eigenvectors(d.phi);
  return s;
}

Spectrum numeric_spectrum(const HermitianMatrix4& h, const JacobiOptions& opts) {
  Eigen::Matrix4cd a = h.matrix();
  Eigen::Matrix4cd q = Eigen::Matrix4cd::Identity();
  const double scale = std::max(1.0, a.norm());

  auto off_norm = [&a] {
    double acc = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) acc += std::norm(a(i, j));
    return std::sqrt(acc);
  };

  int sweep = 0;
  while (off_norm() >= opts.off_diagonal_tolerance * scale) {
    if (sweep++ >= opts.max_sweeps) {
      throw Error(ErrorKind::NoConvergence, "Jacobi iteration did not converge");
    }
    for (int p = 0; p < 3; ++p) {
      for (int r = p + 1; r < 4; ++r) {
        const double mag = std::abs(a(p, r));
        if (mag == 0.0) continue;
        // Phase rotation makes a(p, r) real, then a real Givens rotation
        // annihilates it.
        const Complex phase = std::conj(a(p, r)) / mag;
        const double theta = (a(r, r).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
        u(p, p) = c;
        u(p, r) = s;
        u(r, p) = -s * phase;
        u(r, r) = c * phase;
        a = u.adjoint() * a * u;
        a(p, r) = a(r, p) = 0.0;
        q = q * u;
      }
    }
  }

  std::array<int, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  Spectrum out;
  for (int k = 0; k < 4; ++k) {
    out.energies[k] = a(order[k], order[k]).real();
    out.states[k] = q.col(order[k]);
  }
  return out;
}

double max_residual(const HermitianMatrix4& h, const Spectrum& s) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const TwoQubitState v = s.states[k].normalized();
    worst = std::max(worst, (h.matrix() * v - s.energies[k] * v).norm());
  }
  return worst;
}

double orthonormality_error(const Spectrum& s) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex ip = s.states[i].dot(s.states[j]);
      worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

LabelMatch match_labels(const Spectrum& analytic, const Spectrum& numeric,
                        double degeneracy_tol) {
  // Clusters of numerically degenerate energies.
  std::array<int, 4> cluster{};
  for (int i = 0; i < 4; ++i) {
    cluster[i] = i;
    for (int k = 0; k < i; ++k) {
      if (std::abs(numeric.energies[i] - numeric.energies[k]) <= degeneracy_tol) {
        cluster[i] = cluster[k];
        break;
      }
    }
  }
  auto projection = [&](const TwoQubitState& v, int i) {
    double acc = 0.0;
    int members = 0;
    for (int m = 0; m < 4; ++m) {
      if (cluster[m] != cluster[i]) continue;
      acc += std::norm(numeric.states[m].normalized().dot(v));
      ++members;
    }
    return std::pair{std::sqrt(acc), members > 1};
  };

  LabelMatch out;
  std::array<bool, 4> used{};
  for (int k = 0; k < 4; ++k) {
    const TwoQubitState v = analytic.states[k].normalized();
    int best = -1;
    double best_score = -1.0, best_gap = 0.0;
    bool best_deg = false;
    for (int i = 0; i < 4; ++i) {
      if (used[i]) continue;
      const auto [score, deg] = projection(v, i);
      const double gap = std::abs(numeric.energies[i] - analytic.energies[k]);
      if (score > best_score + 1e-12 ||
          (std::abs(score - best_score) <= 1e-12 && gap < best_gap)) {
        best = i;
        best_score = score;
        best_gap = gap;
        best_deg = deg;
      }
    }
    used[best] = true;
    out.numeric_index[k] = best;
    out.overlap[k] = best_score;
    out.degenerate[k] = best_deg;
    out.max_energy_error = std::max(out.max_energy_error, best_gap);
  }
  return out;
}

std::array<TwoQubitState, 4> perturbed_eigenvectors(const ChartPoint& x, double beta,
                                                    double rho) {
  std::array<TwoQubitState, 4> v = unperturbed_eigenvectors(x.phi);
  if (beta == 0.0) return v;
  const double d13 = 2.0 * x.c3 + x.omega - x.c_plus;  // E1 - E3
  const double d23 = 2.0 * x.c3 - x.omega - x.c_plus;  // E2 - E3
  if (std::abs(d13) < rho || std::abs(d23) < rho) {
    throw Error(ErrorKind::Resonance,
                "energy denominator 2c3 +- omega - c_plus = " +
                    std::to_string(std::abs(d13) < rho ? d13 : d23) +
                    " is below the resonance threshold");
  }
  const PhiTerms t = phi_terms(x.phi);
  // <psi3|V|psi1> / beta and <psi3|V|psi2> / beta for V = beta (X1 + X2);
  // psi4 is annihilated by V.
  const double a1 = t.r1 + t.sqrt_om;
  const double a2 = t.r2 - t.sqrt_op;
  const double e1 = beta * a1 / d13;
  const double e2 = beta * a2 / d23;
  const TwoQubitState p1 = v[0], p2 = v[1], p3 = v[2];
  v[0] = p1 + e1 * p3;
  v[1] = p2 + e2 * p3;
  v[2] = p3 - e1 * p1 - e2 * p2;
  return v;
}

Spectrum perturbed_eigenstates(const HamiltonianParams& p, double beta, double rho) {
  Spectrum s = analytic_spectrum(p);
  if (beta == 0.0) return s;
  const auto v = perturbed_eigenvectors(chart_point(p), beta, rho);
  for (int k = 0; k < 4; ++k) s.states[k] = v[k].normalized();
  return s;
}

}  // namespace qgeom
