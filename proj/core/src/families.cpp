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

#include "qgeom/families.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "qgeom/error.hpp"

namespace qgeom {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Complex cis(double angle) { return std::polar(1.0, angle); }

// (-1)^n for small integers.
double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

std::string_view to_string(Coord c) {
  switch (c) {
    case Coord::c_plus: return "c_plus";
    case Coord::phi: return "phi";
    case Coord::omega: return "omega";
    case Coord::c3: return "c3";
    case Coord::c: return "c";
    case Coord::c_prime: return "c_prime";
    case Coord::theta: return "theta";
    case Coord::phi_prime: return "phi_prime";
    case Coord::c3_prime: return "c3_prime";
    case Coord::c_plus_prime: return "c_plus_prime";
  }
  return "?";
}

Coord parse_coord(std::string_view s) {
  for (Coord c : {Coord::c_plus, Coord::phi, Coord::omega, Coord::c3, Coord::c,
                  Coord::c_prime, Coord::theta, Coord::phi_prime, Coord::c3_prime,
                  Coord::c_plus_prime}) {
    if (s == to_string(c)) return c;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown coordinate '" + std::string(s) + "'");
}

TwoQubitState evolved_state(const InitialCoefficients& eta, const ChartPoint& x) {
  const auto psi = unperturbed_eigenvectors(x.phi);
  const TwoQubitState v = eta.at(0) * cis(-x.omega) * psi[0] +
                          eta.at(1) * cis(x.omega) * psi[1] +
                          eta.at(2) * cis(2.0 * x.c3 - x.c_plus) * psi[2] +
                          eta.at(3) * cis(2.0 * x.c3 + x.c_plus) * psi[3];
  return cis(-x.c3) * v;
}

TwoQubitState evolved_state(const InitialCoefficients& eta, const ChartPoint& x,
                            double beta, double rho) {
  if (beta == 0.0) return evolved_state(eta, x);
  const auto psi = perturbed_eigenvectors(x, beta, rho);
  const TwoQubitState v = eta.at(0) * cis(-x.omega) * psi[0] +
                          eta.at(1) * cis(x.omega) * psi[1] +
                          eta.at(2) * cis(2.0 * x.c3 - x.c_plus) * psi[2] +
                          eta.at(3) * cis(2.0 * x.c3 + x.c_plus) * psi[3];
  return (cis(-x.c3) * v).normalized();
}

std::vector<Coord> chart_for(Case c) {
  switch (c) {
    case Case::C1: return {Coord::c_plus};
    case Case::C2: return {Coord::phi};
    case Case::C3: return {Coord::omega, Coord::phi};
    case Case::C4: return {Coord::phi, Coord::c};
    case Case::C5: return {Coord::omega, Coord::phi, Coord::c};
    case Case::C6: return {Coord::phi, Coord::c, Coord::c_plus};
    case Case::C7: return {Coord::omega, Coord::phi, Coord::c3, Coord::c_plus};
  }
  return {};
}

StateFamily::StateFamily(CaseClass cls, InitialCoefficients eta, double beta,
                         ChartPoint base, double rho)
    : cls_(cls), eta_(eta), chart_(chart_for(cls.id)), beta_(beta), base_(base),
      rho_(rho) {}

StateFamily StateFamily::with_beta(double beta) const {
  return StateFamily(cls_, eta_, beta, base_, rho_);
}

ChartPoint StateFamily::physical_point(std::span<const double> xi) const {
  ChartPoint x = base_;
  for (std::size_t k = 0; k < chart_.size(); ++k) {
    switch (chart_[k]) {
      case Coord::omega: x.omega = xi[k]; break;
      case Coord::phi: x.phi = xi[k]; break;
      case Coord::c3: x.c3 = xi[k]; break;
      case Coord::c_plus: x.c_plus = xi[k]; break;
      default: break;
    }
  }
  return x;
}

std::vector<double> StateFamily::coordinates_of(const ChartPoint& x) const {
  const int l = cls_.l, j = cls_.j;
  switch (cls_.id) {
    case Case::C1: return {x.c_plus};
    case Case::C2: return {x.phi};
    case Case::C3: return {x.omega, x.phi};
    case Case::C4:
      return {x.phi, 2.0 * x.c3 + parity(j) * x.c_plus + parity(l + 1) * x.omega};
    case Case::C5: return {x.omega, x.phi, 2.0 * x.c3 + parity(j) * x.c_plus};
    case Case::C6: return {x.phi, 2.0 * x.c3 + parity(l + 1) * x.omega, x.c_plus};
    case Case::C7: return {x.omega, x.phi, x.c3, x.c_plus};
  }
  return {};
}

std::array<TwoQubitState, 4> StateFamily::basis(const ChartPoint& x) const {
  if (beta_ == 0.0) return unperturbed_eigenvectors(x.phi);
  return perturbed_eigenvectors(x, beta_, rho_);
}

TwoQubitState StateFamily::operator()(std::span<const double> xi) const {
  if (xi.size() != chart_.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "family " + cls_.name() + " expects " + std::to_string(chart_.size()) +
                    " coordinates, got " + std::to_string(xi.size()));
  }
  const ChartPoint x = physical_point(xi);
  const auto psi = basis(x);
  const auto& e = eta_;
  const int l = cls_.l, j = cls_.j;
  TwoQubitState v;
  switch (cls_.id) {
    case Case::C1:
      v = cis(x.c3) * (e.at(2) * cis(-x.c_plus) * psi[2] + e.at(3) * cis(x.c_plus) * psi[3]);
      break;
    case Case::C2:
      v = e.at(l - 1) * psi[l - 1];
      break;
    case Case::C3:
      v = cis(-x.c3) * (e.at(0) * cis(-x.omega) * psi[0] + e.at(1) * cis(x.omega) * psi[1]);
      break;
    case Case::C4: {
      const double c = xi[1];
      v = cis(-(x.c3 + parity(l) * x.omega)) *
          (e.at(l - 1) * psi[l - 1] + e.at(j - 1) * cis(c) * psi[j - 1]);
      break;
    }
    case Case::C5: {
      const double c = xi[2];
      v = cis(-x.c3) * (e.at(0) * cis(-x.omega) * psi[0] + e.at(1) * cis(x.omega) * psi[1] +
                        e.at(j - 1) * cis(c) * psi[j - 1]);
      break;
    }
    case Case::C6: {
      const double c = xi[1];
      v = cis(-(x.c3 + parity(l + 1) * x.omega)) *
          (e.at(l - 1) * psi[l - 1] + e.at(2) * cis(c - x.c_plus) * psi[2] +
           e.at(3) * cis(c + x.c_plus) * psi[3]);
      break;
    }
    case Case::C7:
      v = cis(-x.c3) * (e.at(0) * cis(-x.omega) * psi[0] + e.at(1) * cis(x.omega) * psi[1] +
                        e.at(2) * cis(2.0 * x.c3 - x.c_plus) * psi[2] +
                        e.at(3) * cis(2.0 * x.c3 + x.c_plus) * psi[3]);
      break;
  }
  if (beta_ != 0.0) v.normalize();
  return v;
}

StateFamily family_for_case(const CaseClass& cls, const InitialCoefficients& eta,
                            double beta, const ChartPoint& base, double rho) {
  const CaseClass actual = classify(eta);
  if (!(actual == cls)) {
    throw Error(ErrorKind::CaseMismatch,
                "coefficients classify as " + actual.name() + ", not " + cls.name());
  }
  return StateFamily(cls, eta, beta, base, rho);
}

StateFamily family_for(const InitialCoefficients& eta, double beta, const ChartPoint& base) {
  return StateFamily(classify(eta), eta, beta, base, kDefaultResonanceThreshold);
}

std::vector<PeriodicityCondition> periodicity_conditions(Case c) {
  const Complex one(1.0, 0.0), minus(-1.0, 0.0);
  switch (c) {
    case Case::C1:
      return {{"c_plus+pi", {kPi}, minus}};
    case Case::C2:
      return {{"phi+2pi", {2 * kPi}, one}};
    case Case::C3:
      return {{"omega+pi", {kPi, 0}, minus}, {"phi+2pi", {0, 2 * kPi}, one}};
    case Case::C4:
      return {{"phi+2pi", {2 * kPi, 0}, one}, {"c+2pi", {0, 2 * kPi}, one}};
    case Case::C5:
      return {{"omega+pi,c+pi", {kPi, 0, kPi}, minus},
              {"phi+2pi", {0, 2 * kPi, 0}, one},
              {"c+2pi", {0, 0, 2 * kPi}, one}};
    case Case::C6:
      return {{"phi+2pi", {2 * kPi, 0, 0}, one},
              {"c+2pi", {0, 2 * kPi, 0}, one},
              {"c+pi,c_plus+pi", {0, kPi, kPi}, one}};
    case Case::C7:
      return {{"omega+pi,c3+pi/2", {kPi, 0, kPi / 2, 0}, kI},
              {"omega+pi,c_plus+pi", {kPi, 0, 0, kPi}, minus},
              {"phi+2pi", {0, 2 * kPi, 0, 0}, one},
              {"c3+pi", {0, 0, kPi, 0}, minus},
              {"c3+pi/2,c_plus+pi", {0, 0, kPi / 2, kPi}, -kI}};
  }
  return {};
}

bool PeriodicityReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

PeriodicityReport check_periodicity(const StateFamily& f, std::uint64_t seed, int samples,
                                    double tol) {
  if (f.beta() != 0.0) {
    throw Error(ErrorKind::InvalidArgument, "periodicity is checked for beta = 0 only");
  }
  std::mt19937_64 rng(seed);
  // phi stays clear of +-pi/2, where the eigenvector branch switches sign.
  std::uniform_real_distribution<double> generic(-3.0, 3.0);
  std::uniform_real_distribution<double> phi_dist(-1.4, 1.4);

  PeriodicityReport report{f.case_class(), {}};
  for (const auto& cond : periodicity_conditions(f.case_class().id)) {
    PeriodicityCheck check{cond, samples, 1.0, 0.0, true};
    for (int s = 0; s < samples; ++s) {
      std::vector<double> xi(f.dimension());
      for (std::size_t k = 0; k < xi.size(); ++k) {
        xi[k] = f.chart()[k] == Coord::phi ? phi_dist(rng) : generic(rng);
      }
      std::vector<double> shifted = xi;
      for (std::size_t k = 0; k < xi.size(); ++k) shifted[k] += cond.shift[k];
      const Complex overlap = f(xi).dot(f(shifted));
      check.min_fidelity = std::min(check.min_fidelity, std::norm(overlap));
      check.max_phase_error = std::max(check.max_phase_error, std::abs(overlap - cond.phase));
    }
    check.passed = check.max_phase_error < tol;
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace qgeom
