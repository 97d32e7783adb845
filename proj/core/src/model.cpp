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

#include "qgeom/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "qgeom/error.hpp"

namespace qgeom {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::NotNormalized: return "not normalized";
    case ErrorKind::StationaryState: return "stationary state";
    case ErrorKind::AmbiguousClassification: return "ambiguous classification";
    case ErrorKind::DegenerateChart: return "degenerate chart";
    case ErrorKind::NonHermitian: return "non-Hermitian matrix";
    case ErrorKind::Resonance: return "perturbation-theory breakdown";
    case ErrorKind::ChartSingularity: return "chart singularity";
    case ErrorKind::SingularMetric: return "singular metric";
    case ErrorKind::SingularTransform: return "transform singular";
    case ErrorKind::DomainError: return "domain error";
    case ErrorKind::CaseMismatch: return "case mismatch";
    case ErrorKind::AssumptionViolated: return "assumption violated";
    case ErrorKind::UnsupportedChart: return "unsupported chart";
    case ErrorKind::NoConvergence: return "no convergence";
  }
  return "unknown";
}

bool is_numerical(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateChart:
    case ErrorKind::Resonance:
    case ErrorKind::ChartSingularity:
    case ErrorKind::SingularMetric:
    case ErrorKind::SingularTransform:
    case ErrorKind::DomainError:
    case ErrorKind::NoConvergence:
      return true;
    default:
      return false;
  }
}

DerivedParams derive_params(const HamiltonianParams& p) {
  for (double v : {p.b, p.c1, p.c2, p.c3, p.beta}) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument, "Hamiltonian parameters must be finite");
    }
  }
  DerivedParams d;
  d.c_plus = p.c1 + p.c2;
  d.c_minus = p.c1 - p.c2;
  d.omega = std::hypot(2.0 * p.b, d.c_minus);
  if (d.omega == 0.0) {
    d.phi = 0.0;
    d.degenerate = true;
  } else {
    d.phi = std::atan2(2.0 * p.b, d.c_minus);
  }
  return d;
}

ChartPoint chart_point(const HamiltonianParams& p) {
  const DerivedParams d = derive_params(p);
  return {d.omega, d.phi, p.c3, d.c_plus};
}

InitialCoefficients::InitialCoefficients(const std::array<Complex, 4>& eta, double tol)
    : eta_(eta) {
  double n2 = 0.0;
  for (const auto& e : eta_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw Error(ErrorKind::InvalidArgument, "initial coefficients must be finite");
    }
    n2 += std::norm(e);
  }
  if (std::abs(n2 - 1.0) > tol) {
    throw Error(ErrorKind::NotNormalized,
                "initial coefficients have squared norm " + std::to_string(n2));
  }
}

InitialCoefficients InitialCoefficients::normalized(const std::array<Complex, 4>& eta) {
  double n2 = 0.0;
  for (const auto& e : eta) n2 += std::norm(e);
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw Error(ErrorKind::InvalidArgument, "cannot normalize a zero coefficient vector");
  }
  const double s = 1.0 / std::sqrt(n2);
  std::array<Complex, 4> out{};
  std::transform(eta.begin(), eta.end(), out.begin(), [s](Complex e) { return e * s; });
  return InitialCoefficients(out);
}

InitialCoefficients InitialCoefficients::from_polar(const std::array<double, 4>& magnitude,
                                                    const std::array<double, 4>& phase) {
  std::array<Complex, 4> eta{};
  for (std::size_t k = 0; k < 4; ++k) eta[k] = std::polar(magnitude[k], phase[k]);
  return normalized(eta);
}

double InitialCoefficients::alpha(int i, int j) const {
  if (i < 1 || i > 4 || j < 1 || j > 4) {
    throw Error(ErrorKind::InvalidArgument, "alpha indices are one-based in [1, 4]");
  }
  return phase(static_cast<std::size_t>(i - 1)) - phase(static_cast<std::size_t>(j - 1));
}

int dimension(Case c) {
  switch (c) {
    case Case::C1:
    case Case::C2: return 1;
    case Case::C3:
    case Case::C4: return 2;
    case Case::C5:
    case Case::C6: return 3;
    case Case::C7: return 4;
  }
  return 0;
}

std::string_view to_string(Case c) {
  static constexpr std::string_view names[] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7"};
  return names[static_cast<int>(c)];
}

Case parse_case(std::string_view s) {
  if (s.size() == 2 && (s[0] == 'C' || s[0] == 'c') && s[1] >= '1' && s[1] <= '7') {
    return static_cast<Case>(s[1] - '1');
  }
  throw Error(ErrorKind::InvalidArgument, "unknown case '" + std::string(s) + "'");
}

int CaseClass::dimension() const { return qgeom::dimension(id); }

std::string CaseClass::name() const {
  std::string out(to_string(id));
  if (l != 0 || j != 0) {
    out += "(";
    if (l != 0) out += "l=" + std::to_string(l);
    if (l != 0 && j != 0) out += ",";
    if (j != 0) out += "j=" + std::to_string(j);
    out += ")";
  }
  return out;
}

CaseClass classify(const InitialCoefficients& eta, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "classification tol must be > 0");
  std::array<bool, 4> nz{};
  int count = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double m = std::abs(eta.at(k));
    if (m > tol && m <= 2.0 * tol) {
      throw Error(ErrorKind::AmbiguousClassification,
                  "|eta_" + std::to_string(k + 1) +
                      "| lies within tol of the zero threshold; use a tighter tol");
    }
    nz[k] = m > tol;
    count += nz[k] ? 1 : 0;
  }
  const int n12 = int(nz[0]) + int(nz[1]);
  const int n34 = int(nz[2]) + int(nz[3]);
  const int l = nz[0] ? 1 : 2;
  const int j = nz[2] ? 3 : 4;

  // A lone eta1 or eta2 still traces a circle as phi varies (C2); a lone eta3
  // or eta4 is parameter independent.
  if (n12 == 1 && n34 == 0) return {Case::C2, l, 0};
  if (count <= 1) {
    throw Error(ErrorKind::StationaryState,
                "a single phi-independent eigenstate coefficient is nonzero: the orbit is a point");
  }
  if (n12 == 0 && n34 == 2) return {Case::C1, 0, 0};
  if (n12 == 2 && n34 == 0) return {Case::C3, 0, 0};
  if (n12 == 1 && n34 == 1) return {Case::C4, l, j};
  if (n12 == 2 && n34 == 1) return {Case::C5, 0, j};
  if (n12 == 1 && n34 == 2) return {Case::C6, l, 0};
  return {Case::C7, 0, 0};
}

InitialCoefficients default_coefficients(Case c) {
  const double r2 = 1.0 / std::numbers::sqrt2;
  switch (c) {
    case Case::C1: return InitialCoefficients({0.0, 0.0, r2, r2});
    case Case::C2: return InitialCoefficients({1.0, 0.0, 0.0, 0.0});
    case Case::C3: return InitialCoefficients({r2, r2, 0.0, 0.0});
    case Case::C4: return InitialCoefficients({r2, 0.0, r2, 0.0});
    case Case::C5: return InitialCoefficients({0.5, 0.5, r2, 0.0});
    case Case::C6: return InitialCoefficients({r2, 0.0, 0.5, 0.5});
    case Case::C7: return InitialCoefficients({0.5, 0.5, 0.5, 0.5});
  }
  throw Error(ErrorKind::InvalidArgument, "unknown case");
}

}  // namespace qgeom
