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

#include "qgeom/curvature.hpp"

#include <cmath>
#include <numbers>

#include "qgeom/error.hpp"

namespace qgeom {
namespace {

using Eigen::MatrixXd;

constexpr double kHuge = 1e6;

struct Derivatives {
  MatrixXd g;
  std::vector<MatrixXd> dg;                // dg[a] = d_a g
  std::vector<std::vector<MatrixXd>> ddg;  // ddg[a][b] = d_a d_b g
};

Derivatives differentiate(const MetricField& field, std::span<const double> xi, double h) {
  const std::size_t n = field.dim;
  std::vector<double> x(xi.begin(), xi.end());
  auto at = [&](std::size_t a, double sa, std::size_t b, double sb) {
    std::vector<double> y = x;
    y[a] += sa;
    y[b] += sb;
    return field.evaluate(y);
  };
  Derivatives d;
  d.g = field.evaluate(x);
  d.dg.resize(n);
  d.ddg.assign(n, std::vector<MatrixXd>(n));
  const double w[4] = {8.0, -8.0, -1.0, 1.0};
  const double s[4] = {1.0, -1.0, 2.0, -2.0};
  for (std::size_t a = 0; a < n; ++a) {
    const MatrixXd p1 = at(a, h, a, 0.0), m1 = at(a, -h, a, 0.0);
    const MatrixXd p2 = at(a, 2 * h, a, 0.0), m2 = at(a, -2 * h, a, 0.0);
    d.dg[a] = (8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * h);
    d.ddg[a][a] = (-p2 + 16.0 * p1 - 30.0 * d.g + 16.0 * m1 - m2) / (12.0 * h * h);
    for (std::size_t b = 0; b < a; ++b) {
      MatrixXd acc = MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += w[i] * w[j] * at(a, s[i] * h, b, s[j] * h);
      d.ddg[a][b] = acc / (144.0 * h * h);
      d.ddg[b][a] = d.ddg[a][b];
    }
  }
  return d;
}

struct Geometry {
  Tensor3 christoffel;
  Tensor4 riemann;
  MatrixXd ricci;
  double scalar = 0.0;
};

Geometry assemble(const Derivatives& d) {
  const std::size_t n = static_cast<std::size_t>(d.g.rows());
  const MatrixXd gi = d.g.inverse();
  auto I = [](std::size_t k) { return static_cast<Eigen::Index>(k); };

  // Lowered symbols G[l][m][v] and their derivatives dG[s][l][m][v].
  Tensor3 low(n);
  Tensor4 dlow(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) {
        low(l, m, v) = 0.5 * (d.dg[m](I(l), I(v)) + d.dg[v](I(l), I(m)) - d.dg[l](I(m), I(v)));
        for (std::size_t s = 0; s < n; ++s) {
          dlow(s, l, m, v) = 0.5 * (d.ddg[s][m](I(l), I(v)) + d.ddg[s][v](I(l), I(m)) -
                                    d.ddg[s][l](I(m), I(v)));
        }
      }

  std::vector<MatrixXd> dgi(n);
  for (std::size_t s = 0; s < n; ++s) dgi[s] = -gi * d.dg[s] * gi;

  Geometry out;
  out.christoffel = Tensor3(n);
  Tensor4 dchr(n);  // dchr(s, r, m, v) = d_s Gamma^r_{mv}
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t v = 0; v < n; ++v) {
        double c = 0.0;
        for (std::size_t l = 0; l < n; ++l) c += gi(I(r), I(l)) * low(l, m, v);
        out.christoffel(r, m, v) = c;
        for (std::size_t s = 0; s < n; ++s) {
          double dc = 0.0;
          for (std::size_t l = 0; l < n; ++l) {
            dc += dgi[s](I(r), I(l)) * low(l, m, v) + gi(I(r), I(l)) * dlow(s, l, m, v);
          }
          dchr(s, r, m, v) = dc;
        }
      }

  const Tensor3& G = out.christoffel;
  out.riemann = Tensor4(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t sg = 0; sg < n; ++sg)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = 0; v < n; ++v) {
          double val = dchr(m, r, v, sg) - dchr(v, r, m, sg);
          for (std::size_t l = 0; l < n; ++l) {
            val += G(r, m, l) * G(l, v, sg) - G(r, v, l) * G(l, m, sg);
          }
          out.riemann(r, sg, m, v) = val;
        }

  out.ricci = MatrixXd::Zero(I(n), I(n));
  for (std::size_t sg = 0; sg < n; ++sg)
    for (std::size_t v = 0; v < n; ++v) {
      double val = 0.0;
      for (std::size_t r = 0; r < n; ++r) val += out.riemann(r, sg, r, v);
      out.ricci(I(sg), I(v)) = val;
    }
  out.scalar = (gi.cwiseProduct(out.ricci)).sum();
  return out;
}

template <class T>
void richardson(T& fine, const T& coarse) {
  auto& a = fine.data();
  const auto& b = coarse.data();
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = (16.0 * a[k] - b[k]) / 15.0;
}

}  // namespace

MetricField metric_field(const StateFamily& f, double gamma, double h_metric) {
  MetricField field;
  field.dim = f.dimension();
  field.evaluate = [f, gamma, h_metric](std::span<const double> xi) {
    return numeric_fs_metric(f, xi, gamma, h_metric).g;
  };
  for (Coord c : f.chart()) {
    // The eigenvector branch is smooth only while cos(phi) keeps its sign.
    if (c == Coord::phi) {
      field.domain.push_back({-std::numbers::pi / 2, std::numbers::pi / 2});
    } else {
      field.domain.push_back({-kHuge, kHuge});
    }
  }
  return field;
}

MetricField scaled(MetricField field, double factor) {
  auto inner = field.evaluate;
  field.evaluate = [inner, factor](std::span<const double> xi) {
    return MatrixXd(factor * inner(xi));
  };
  return field;
}

double CurvatureReport::max_antisymmetry_violation() const {
  const std::size_t n = riemann.dim();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = 0; v < n; ++v)
          worst = std::max(worst, std::abs(riemann(r, s, m, v) + riemann(r, s, v, m)));
  return worst;
}

double CurvatureReport::max_bianchi_violation() const {
  const std::size_t n = riemann.dim();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t v = 0; v < n; ++v)
          worst = std::max(worst, std::abs(riemann(r, s, m, v) + riemann(r, m, v, s) +
                                           riemann(r, v, s, m)));
  return worst;
}

double CurvatureReport::max_ricci_asymmetry() const {
  if (ricci.size() == 0) return 0.0;
  return (ricci - ricci.transpose()).cwiseAbs().maxCoeff();
}

CurvatureReport curvature_at(const MetricField& field, std::span<const double> xi,
                             const CurvatureOptions& opts) {
  if (xi.size() != field.dim) {
    throw Error(ErrorKind::InvalidArgument, "coordinate vector does not match field dimension");
  }
  if (!(opts.h > 0.0)) throw Error(ErrorKind::InvalidArgument, "curvature step must be positive");
  for (std::size_t k = 0; k < xi.size() && k < field.domain.size(); ++k) {
    const auto& iv = field.domain[k];
    if (xi[k] - 2 * opts.h < iv.lo || xi[k] + 2 * opts.h > iv.hi) {
      throw Error(ErrorKind::DomainError, "coordinate " + std::to_string(k) +
                                              " within 2h of the domain boundary");
    }
  }

  CurvatureReport rep;
  rep.point.assign(xi.begin(), xi.end());
  rep.h = opts.h;
  rep.metric = field.evaluate(xi);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(rep.metric, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  if (lo < opts.singular_tolerance) {
    throw Error(ErrorKind::SingularMetric,
                "metric singular: min eigenvalue " + std::to_string(lo));
  }
  rep.condition_number = hi / lo;

  const std::size_t n = field.dim;
  if (n == 1) {
    rep.christoffel = Tensor3(1);
    rep.riemann = Tensor4(1);
    rep.ricci = MatrixXd::Zero(1, 1);
    rep.scalar = 0.0;
    rep.note = "one-dimensional: intrinsic curvature vanishes";
    return rep;
  }

  Geometry geo = assemble(differentiate(field, xi, opts.h));
  if (opts.richardson) {
    Geometry fine = assemble(differentiate(field, xi, 0.5 * opts.h));
    richardson(fine.christoffel, geo.christoffel);
    richardson(fine.riemann, geo.riemann);
    fine.ricci = (16.0 * fine.ricci - geo.ricci) / 15.0;
    fine.scalar = (16.0 * fine.scalar - geo.scalar) / 15.0;
    geo = std::move(fine);
  }
  rep.christoffel = std::move(geo.christoffel);
  rep.riemann = std::move(geo.riemann);
  rep.ricci = std::move(geo.ricci);
  rep.scalar = geo.scalar;
  if (!std::isfinite(rep.scalar)) {
    throw Error(ErrorKind::ChartSingularity, "curvature is not finite at the sample point");
  }
  return rep;
}

G0Result analytic_g0_and_ricci(double omega, double alpha12, double gamma) {
  const double g2 = gamma * gamma;
  const double a = alpha12 + 2.0 * omega;
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = g2 / 2.0;
  g(1, 1) = g2 * (std::cos(2.0 * a) + 3.0) / 32.0;
  g(1, 2) = g(2, 1) = g2 * std::sin(a) / 4.0;
  g(2, 2) = g2;
  g(3, 3) = g2 / 2.0;

  Eigen::Matrix4d r = Eigen::Matrix4d::Zero();
  r(0, 0) = 3.0;
  r(1, 1) = (5.0 * std::cos(2.0 * a) + 7.0) / 16.0;
  r(1, 2) = r(2, 1) = std::sin(a) / 2.0;
  r(2, 2) = 2.0;

  G0Result out;
  out.metric.g = g;
  out.metric.gamma = gamma;
  out.metric.chart = {Coord::omega, Coord::phi, Coord::c3, Coord::c_plus};
  out.metric.degenerate_rows.assign(4, false);
  out.ricci = r;
  out.scalar = 14.0 / g2;
  return out;
}

MetricField g0_field(double alpha12, double gamma) {
  MetricField field;
  field.dim = 4;
  field.evaluate = [alpha12, gamma](std::span<const double> xi) {
    return MatrixXd(analytic_g0_and_ricci(xi[0], alpha12, gamma).metric.g);
  };
  field.domain.assign(4, {-kHuge, kHuge});
  return field;
}

PerturbedCurvatureTerms perturbed_curvature_terms(double omega, double beta, double gamma) {
  const double w = omega, b = beta;
  const double w2 = w * w, w3 = w2 * w, w4 = w3 * w;
  auto sn = [w](double k) { return std::sin(k * w); };
  auto cs = [w](double k) { return std::cos(k * w); };
  PerturbedCurvatureTerms t;

  t.A1 = 8 * b * std::pow(cs(2), 4) *
         (4 * w2 * sn(1) + 6 * (w2 - 2) * sn(1) * cs(2) + 8 * w * cs(3));
  t.A2 = 6 * b * w2 * (4 * w * sn(1) + sn(1) + sn(3) - 4 * w * cs(1) + cs(1) - cs(5)) + w4 +
         w4 * cs(4);

  t.B1 = (cs(4) + 1) *
         (b * (-16 * w2 * sn(1) + 16 * w2 * sn(3) - 2 * (8 * w2 + 3 * w - 12) * cs(1) -
               4 * (4 * w2 + 9 * w - 1) * cs(3) + 5 * w * sn(1) + 5 * w * sn(3) + w * sn(5) +
               w * sn(7) - 4 * sn(1) + 24 * sn(3) + 4 * sn(7) - 6 * w * cs(7) + 4 * cs(5)) +
          7 * w3 * cs(2) + w3 * cs(6));
  t.B2 = 4 * b * w * (4 * w * sn(1) + sn(1) + sn(3) - 4 * w * cs(1) + cs(1) - cs(5)) + w3 +
         w3 * cs(4);

  t.C1 = 2 * sn(4) *
         (2 * b * (14 * w3 + 4 * w2 - 7 * w + 6) * cs(1) -
          2 * b *
              (14 * w3 * sn(1) + 10 * w3 * sn(3) - 12 * w2 * sn(1) + 7 * w2 * sn(3) +
               7 * w2 * sn(7) + w2 * cs(7) + (4 * w2 - 3) * cs(5) +
               (10 * w3 + 5 * w2 + 12 * w - 3) * cs(3) - w * sn(1) - w * sn(7) + 3 * sn(1) -
               6 * sn(3) - 3 * sn(7) + 5 * w * cs(7)) +
          w4 * sn(2) + w4 * sn(6));
  t.C2 = 6 * b * w2 * (4 * w * sn(1) + sn(1) + sn(3) - 4 * w * cs(1) + cs(1) - cs(5)) + w4 +
         w4 * cs(4);

  t.D1 = cs(2) *
         (b * (160 * w2 * sn(1) - 152 * w2 * sn(3) + 104 * w2 * sn(5) - 104 * w2 * cs(5) -
               2 * (80 * w2 + 9 * w - 32) * cs(1) + (-152 * w2 + 62 * w + 40) * cs(3) +
               52 * w * sn(1) - 46 * w * sn(3) + 42 * w * sn(5) + 19 * w * sn(7) +
               7 * w * sn(9) + 16 * sn(3) + 16 * sn(5) - 54 * w * cs(5) - 22 * w * cs(9) +
               24 * cs(5) - 4 * cs(7) + 4 * cs(9)) +
          19 * w3 + 24 * w3 * cs(4) + 5 * w3 * cs(8));
  t.D2 = 6 * b * w * (4 * w * sn(1) + sn(1) + sn(3) - 4 * w * cs(1) + cs(1) - cs(5)) + w3 +
         w3 * cs(4);

  t.E1 = cs(2) *
         (-2 * b * (40 * w3 + 21 * w2 - 44 * w + 6) * cs(1) +
          2 * b * (-100 * w3 + 55 * w2 + 36 * w - 6) * cs(3) +
          b * (80 * w3 * sn(1) - 200 * w3 * sn(3) + 136 * w3 * sn(5) + 24 * w2 * sn(1) -
               82 * w2 * sn(3) + 54 * w2 * sn(5) + 25 * w2 * sn(7) + 9 * w2 * sn(9) +
               (-38 * w2 + 8 * w + 12) * cs(9) - 2 * (68 * w3 + 31 * w2 - 12 * w - 6) * cs(5) -
               16 * w * sn(1) + 48 * w * sn(3) + 48 * w * sn(5) + 16 * w * sn(9) - 48 * sn(1) +
               12 * sn(3) - 36 * sn(5) - 6 * sn(7) - 6 * sn(9)) +
          18 * w4 + 24 * w4 * cs(4) + 6 * w4 * cs(8));
  t.E2 = 6 * b * w2 * (4 * w * sn(1) + sn(1) + sn(3) - 4 * w * cs(1) + cs(1) - cs(5)) + w4 +
         w4 * cs(4);

  const double q = cs(4) + 1;
  t.prefactor = cs(2) / (gamma * gamma * q * q);
  return t;
}

double perturbed_scalar_curvature_closed_form(double omega, double beta, double gamma) {
  constexpr double tiny = 1e-12;
  const double q = std::cos(4 * omega) + 1;
  if (q * q < tiny) {
    throw Error(ErrorKind::DomainError, "closed form singular: (cos 4w + 1)^2 vanishes");
  }
  const auto t = perturbed_curvature_terms(omega, beta, gamma);
  const std::pair<const char*, double> dens[] = {
      {"A2", t.A2}, {"B2", t.B2}, {"C2", t.C2}, {"D2", t.D2}, {"E2", t.E2}};
  for (const auto& [name, v] : dens) {
    if (std::abs(v) < tiny) {
      throw Error(ErrorKind::DomainError, std::string("closed form singular: ") + name +
                                              " vanishes");
    }
  }
  return t.prefactor * (t.A1 / t.A2 + t.B1 / t.B2 + t.C1 / t.C2 + t.D1 / t.D2 + t.E1 / t.E2);
}

}  // namespace qgeom
