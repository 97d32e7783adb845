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

#include "qgeom/entanglement.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "qgeom/error.hpp"

namespace qgeom {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEqualTol = 1e-10;

double sq(double x) { return x * x; }
double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

void require_equal(const InitialCoefficients& eta, int a, int b, const char* what) {
  if (std::abs(eta.at(static_cast<std::size_t>(a - 1)) -
               eta.at(static_cast<std::size_t>(b - 1))) > kEqualTol) {
    throw Error(ErrorKind::AssumptionViolated, std::string("closed form requires ") + what);
  }
}

}  // namespace

double concurrence(const TwoQubitState& s) {
  if (std::abs(s.squaredNorm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::NotNormalized, "concurrence needs a normalized state");
  }
  return 2.0 * std::abs(s(0) * s(3) - s(1) * s(2));
}

double concurrence_general(const InitialCoefficients& eta, const ChartPoint& x) {
  const Complex e1 = eta.at(0), e2 = eta.at(1), e3 = eta.at(2), e4 = eta.at(3);
  const Complex v = (e1 * e1 * std::polar(1.0, -2.0 * x.omega) -
                     e2 * e2 * std::polar(1.0, 2.0 * x.omega)) *
                        std::cos(x.phi) -
                    2.0 * e1 * e2 * std::sin(x.phi) -
                    std::polar(1.0, 4.0 * x.c3) * (e3 * e3 * std::polar(1.0, -2.0 * x.c_plus) -
                                                   e4 * e4 * std::polar(1.0, 2.0 * x.c_plus));
  return std::abs(v);
}

double relative_phase(const CaseClass& cls, const InitialCoefficients& eta) {
  auto d = [&](int second, int first) { return eta.alpha(second, first); };
  switch (cls.id) {
    case Case::C1: return d(4, 3);
    case Case::C2: return 0.0;
    case Case::C3: return d(2, 1);
    case Case::C4: return d(cls.j, cls.l);
    case Case::C5: return d(cls.j, 1);
    case Case::C6: return d(3, cls.l);
    case Case::C7: return d(3, 1);
  }
  return 0.0;
}

double concurrence_analytic(const CaseClass& cls, const InitialCoefficients& eta,
                            std::span<const double> xi, FormulaVariant variant) {
  if (xi.size() != static_cast<std::size_t>(dimension(cls.id))) {
    throw Error(ErrorKind::InvalidArgument, "coordinate vector does not match the case chart");
  }
  const double chi = relative_phase(cls, eta);
  const bool fixed = variant == FormulaVariant::Corrected;
  auto a2 = [&](int k) { return eta.abs2(static_cast<std::size_t>(k - 1)); };
  switch (cls.id) {
    case Case::C1: {
      const double v = sq(a2(3)) + sq(a2(4)) - 2 * a2(3) * a2(4) * std::cos(4 * xi[0] + 2 * chi);
      return std::sqrt(std::max(v, 0.0));
    }
    case Case::C2:
      return std::abs(std::cos(xi[0]));
    case Case::C3: {
      const double w = xi[0], phi = xi[1];
      const double m1 = std::sqrt(a2(1)), m2 = std::sqrt(a2(2));
      const double v = (sq(a2(1)) + sq(a2(2)) - 2 * a2(1) * a2(2) * std::cos(4 * w + 2 * chi)) *
                           sq(std::cos(phi)) +
                       4 * a2(1) * a2(2) * sq(std::sin(phi)) -
                       4 * m1 * m2 * (a2(1) - a2(2)) * std::cos(2 * w + chi) * std::sin(phi) *
                           std::cos(phi);
      return std::sqrt(std::max(v, 0.0));
    }
    case Case::C4: {
      const double phi = xi[0], c = xi[1];
      const double al = a2(cls.l), aj = a2(cls.j);
      const double arg = fixed ? 2 * c + 2 * chi : 2 * c + chi;
      const double v = sq(al) * sq(std::cos(phi)) + sq(aj) -
                       2 * parity(cls.l + cls.j) * al * aj * std::cos(arg) * std::cos(phi);
      return std::sqrt(std::max(v, 0.0));
    }
    case Case::C5: {
      require_equal(eta, 1, 2, "eta1 = eta2");
      const double w = xi[0], phi = xi[1], c = xi[2];
      const double a1 = a2(1), aj = a2(cls.j), pj = parity(cls.j);
      const double sw = fixed ? std::sin(2 * w) : std::sin(w);
      const double u = -2 * a1 * std::sin(phi) + pj * aj * std::cos(2 * c + 2 * chi);
      const double v = -2 * a1 * sw * std::cos(phi) + pj * aj * std::sin(2 * c + 2 * chi);
      return std::sqrt(u * u + v * v);
    }
    case Case::C6: {
      require_equal(eta, 3, 4, "eta3 = eta4");
      const double phi = xi[0], c = xi[1], cp = xi[2];
      const double al = a2(cls.l), a3 = a2(3);
      const double u = parity(cls.l + 1) * al * std::cos(phi) -
                       2 * a3 * std::sin(2 * c + 2 * chi) * std::sin(2 * cp);
      const double v2 = 4 * sq(a3) * sq(std::cos(2 * c + 2 * chi)) * sq(std::sin(2 * cp));
      return std::sqrt(u * u + v2);
    }
    case Case::C7: {
      require_equal(eta, 1, 2, "eta1 = eta2");
      require_equal(eta, 3, 4, "eta3 = eta4");
      const double w = xi[0], phi = xi[1], c3 = xi[2], cp = xi[3];
      const double a1 = a2(1), a3 = a2(3);
      const double u = 2 * a1 * std::sin(phi) + 2 * a3 * std::sin(2 * cp) * std::sin(4 * c3 + 2 * chi);
      const double v = -2 * a1 * std::sin(2 * w) * std::cos(phi) +
                       2 * a3 * std::sin(2 * cp) * std::cos(4 * c3 + 2 * chi);
      return std::sqrt(u * u + v * v);
    }
  }
  return 0.0;
}

namespace {

struct Row {
  std::string label;
  // Family coordinates for a given n and free-omega sample.
  std::function<std::vector<double>(int n, double w)> coords;
  bool free_omega = false;
};

// Free entries ("--") are probed at these values.
constexpr double kFreeSamples[] = {0.1, 0.5, 0.77, 1.3, 2.9};

std::vector<Row> table_rows(const CaseClass& cls, double chi) {
  std::vector<Row> rows;
  const double pi = kPi;
  switch (cls.id) {
    case Case::C5: {
      const bool even = cls.j % 2 == 0;
      auto add = [&](std::string label, double phi, std::optional<double> w, auto c) {
        rows.push_back({std::move(label),
                        [=](int n, double free_w) {
                          return std::vector<double>{w ? *w : free_w, phi, c(n)};
                        },
                        !w.has_value()});
      };
      if (even) {
        add("phi=0,omega=pi/2,j=even,c=3pi/4+pi*n-chi", 0.0, pi / 2,
            [=](int n) { return 3 * pi / 4 + pi * n - chi; });
        add("phi=pi/2,omega=--,j=even,c=((2n+1)pi-chi)/2", pi / 2, std::nullopt,
            [=](int n) { return 0.5 * ((2 * n + 1) * pi - chi); });
        add("phi=pi,omega=pi/2,j=even,c=pi/4+pi*n-chi", pi, pi / 2,
            [=](int n) { return pi / 4 + pi * n - chi; });
        add("phi=3pi/2,omega=--,j=even,c=pi*n-chi", 3 * pi / 2, std::nullopt,
            [=](int n) { return pi * n - chi; });
      } else {
        add("phi=0,omega=pi/2,j=odd,c=pi/4+pi*n-chi", 0.0, pi / 2,
            [=](int n) { return pi / 4 + pi * n - chi; });
        add("phi=pi/2,omega=--,j=odd,c=pi*n-chi", pi / 2, std::nullopt,
            [=](int n) { return pi * n - chi; });
        add("phi=pi,omega=pi/2,j=odd,c=3pi/4+pi*n-chi", pi, pi / 2,
            [=](int n) { return 3 * pi / 4 + pi * n - chi; });
        add("phi=3pi/2,omega=--,j=odd,c=((2n+1)pi-chi)/2", 3 * pi / 2, std::nullopt,
            [=](int n) { return 0.5 * ((2 * n + 1) * pi - chi); });
      }
      break;
    }
    case Case::C6: {
      const bool even = cls.l % 2 == 0;
      auto add = [&](std::string label, double phi, double c_off, double cp_off) {
        rows.push_back({std::move(label),
                        [=](int n, double) {
                          return std::vector<double>{phi, c_off + pi * n - chi, cp_off + pi * n};
                        },
                        false});
      };
      const double q = pi / 4, t = 3 * pi / 4;
      if (even) {
        add("phi=0,l=even,c=pi/4+pi*n-chi,c_plus=pi/4+pi*n", 0.0, q, q);
        add("phi=0,l=even,c=3pi/4+pi*n-chi,c_plus=3pi/4+pi*n", 0.0, t, t);
        add("phi=pi,l=even,c=pi/4+pi*n-chi,c_plus=3pi/4+pi*n", pi, q, t);
        add("phi=pi,l=even,c=3pi/4+pi*n-chi,c_plus=pi/4+pi*n", pi, t, q);
      } else {
        add("phi=0,l=odd,c=pi/4+pi*n-chi,c_plus=3pi/4+pi*n", 0.0, q, t);
        add("phi=0,l=odd,c=3pi/4+pi*n-chi,c_plus=pi/4+pi*n", 0.0, t, q);
        add("phi=pi,l=odd,c=pi/4+pi*n-chi,c_plus=pi/4+pi*n", pi, q, q);
        add("phi=pi,l=odd,c=3pi/4+pi*n-chi,c_plus=3pi/4+pi*n", pi, t, t);
      }
      break;
    }
    case Case::C7: {
      auto A = [=](int n) { return 0.25 * ((2 * n + 1) * pi - 2 * chi); };
      auto B = [=](int n) { return 0.5 * (pi * n - chi); };
      auto P = [=](int n) { return 0.25 * (pi / 2 + 2 * pi * n - 2 * chi); };
      auto Q = [=](int n) { return 0.25 * (3 * pi / 2 + 2 * pi * n - 2 * chi); };
      using F = std::function<double(int)>;
      auto add = [&](std::string label, double phi, std::optional<double> w, double cp_off,
                     F c3f) {
        rows.push_back({std::move(label),
                        [=](int n, double free_w) {
                          return std::vector<double>{w ? *w : free_w, phi, c3f(n),
                                                     cp_off + pi * n};
                        },
                        !w.has_value()});
      };
      const double q = pi / 4, t = 3 * pi / 4;
      add("phi=0,omega=pi/4,c_plus=pi/4+pi*n,c3=((2n+1)pi-2chi)/4", 0.0, q, q, A);
      add("phi=0,omega=pi/4,c_plus=3pi/4+pi*n,c3=(pi*n-chi)/2", 0.0, q, t, B);
      add("phi=0,omega=3pi/4,c_plus=pi/4+pi*n,c3=(pi*n-chi)/2", 0.0, t, q, B);
      add("phi=0,omega=3pi/4,c_plus=3pi/4+pi*n,c3=((2n+1)pi-2chi)/4", 0.0, t, t, A);
      add("phi=pi/2,omega=--,c_plus=pi/4+pi*n,c3=(pi/2+2pi*n-2chi)/4", pi / 2, std::nullopt, q,
          P);
      add("phi=pi/2,omega=--,c_plus=3pi/4+pi*n,c3=(3pi/2+2pi*n-2chi)/4", pi / 2, std::nullopt,
          t, Q);
      add("phi=pi,omega=pi/4,c_plus=pi/4+pi*n,c3=(pi*n-chi)/2", pi, q, q, B);
      add("phi=pi,omega=pi/4,c_plus=3pi/4+pi*n,c3=((2n+1)pi-2chi)/4", pi, q, t, A);
      add("phi=pi,omega=3pi/4,c_plus=pi/4+pi*n,c3=((2n+1)pi-2chi)/4", pi, t, q, A);
      add("phi=pi,omega=3pi/4,c_plus=3pi/4+pi*n,c3=(pi*n-chi)/2", pi, t, t, B);
      add("phi=3pi/2,omega=--,c_plus=pi/4+pi*n,c3=(3pi/2+2pi*n-2chi)/4", 3 * pi / 2,
          std::nullopt, q, Q);
      add("phi=3pi/2,omega=--,c_plus=3pi/4+pi*n,c3=(pi/2+2pi*n-2chi)/4", 3 * pi / 2,
          std::nullopt, t, P);
      break;
    }
    default:
      break;
  }
  return rows;
}

}  // namespace

std::vector<MaxEntangledCondition> verify_max_entangled_tables(Case c,
                                                               const InitialCoefficients& eta,
                                                               std::span<const int> n_range,
                                                               double tol) {
  if (c != Case::C5 && c != Case::C6 && c != Case::C7) {
    throw Error(ErrorKind::InvalidArgument, "tables exist for C5, C6 and C7 only");
  }
  const CaseClass cls = classify(eta);
  if (cls.id != c) {
    throw Error(ErrorKind::CaseMismatch,
                "coefficients classify as " + cls.name() + ", not " + std::string(to_string(c)));
  }
  if (c == Case::C5 || c == Case::C7) require_equal(eta, 1, 2, "eta1 = eta2");
  if (c == Case::C6 || c == Case::C7) require_equal(eta, 3, 4, "eta3 = eta4");

  const StateFamily f(cls, eta, 0.0, kDefaultBasePoint, kDefaultResonanceThreshold);
  const double chi = relative_phase(cls, eta);
  std::vector<MaxEntangledCondition> out;
  for (const auto& row : table_rows(cls, chi)) {
    for (int n : n_range) {
      MaxEntangledCondition cond{c, row.label, n, {}, 1.0, true};
      const std::span<const double> ws = row.free_omega ? std::span<const double>(kFreeSamples)
                                                        : std::span<const double>(kFreeSamples, 1);
      // Report the worst free sample for the row.
      for (double w : ws) {
        auto xi = row.coords(n, w);
        const double value = concurrence(f(xi));
        if (cond.coordinates.empty() || std::abs(value - 1.0) > std::abs(cond.concurrence - 1.0)) {
          cond.concurrence = value;
          cond.coordinates = xi;
        }
      }
      cond.passed = std::abs(cond.concurrence - 1.0) <= tol;
      out.push_back(std::move(cond));
    }
  }
  return out;
}

std::vector<MaxEntangledCondition> verify_max_entangled_tables(Case c,
                                                               const InitialCoefficients& eta,
                                                               double tol) {
  static constexpr int kDefaultN[] = {-1, 0, 1, 2};
  return verify_max_entangled_tables(c, eta, kDefaultN, tol);
}

double GridAxis::at(int i) const {
  if (count <= 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

ConcurrenceScan scan_concurrence(const StateFamily& f, const GridSpec& grid) {
  for (const auto& ax : grid) {
    if (ax.count < 1) throw Error(ErrorKind::InvalidArgument, "grid axis needs count >= 1");
    bool found = false;
    for (Coord c : f.chart()) found = found || c == ax.coord;
    if (!found) {
      throw Error(ErrorKind::UnsupportedChart, "grid axis '" + std::string(to_string(ax.coord)) +
                                                   "' is not a coordinate of " +
                                                   f.case_class().name());
    }
  }
  ConcurrenceScan scan{f.case_class(), f.eta(), grid, f.chart(),
                       relative_phase(f.case_class(), f.eta()), {}, {}, 0};
  const std::vector<double> base = f.coordinates_of(f.base());
  std::size_t total = 1;
  for (const auto& ax : grid) total *= static_cast<std::size_t>(ax.count);
  scan.points.reserve(total);
  scan.values.reserve(total);
  std::vector<int> idx(grid.size(), 0);
  for (std::size_t s = 0; s < total; ++s) {
    std::vector<double> xi = base;
    for (std::size_t a = 0; a < grid.size(); ++a) {
      for (std::size_t k = 0; k < xi.size(); ++k)
        if (f.chart()[k] == grid[a].coord) xi[k] = grid[a].at(idx[a]);
    }
    const double value = concurrence(f(xi));
    if (scan.values.empty() || value > scan.values[scan.argmax]) scan.argmax = scan.values.size();
    scan.values.push_back(value);
    scan.points.push_back(std::move(xi));
    // Last axis varies fastest.
    for (std::size_t a = grid.size(); a-- > 0;) {
      if (++idx[a] < grid[a].count) break;
      idx[a] = 0;
    }
  }
  return scan;
}

}  // namespace qgeom
