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

#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "qgeom/qgeom.hpp"

namespace qgeom {
namespace {

TEST(Concurrency, IndependentCallsFromManyThreads) {
  const auto f = family_for(default_coefficients(Case::C7));
  const std::vector<double> xi{0.7, 0.3, 0.2, 0.4};
  const auto ref_metric = numeric_fs_metric(f, xi).g;
  const double ref_scalar = curvature_at(metric_field(f, 1.0, 1e-3), xi).scalar;

  constexpr int kThreads = 8;
  std::vector<Eigen::MatrixXd> metrics(kThreads);
  std::vector<double> scalars(kThreads);
  std::vector<std::thread> pool;
  for (int t = 0; t < kThreads; ++t) {
    pool.emplace_back([&, t] {
      metrics[static_cast<std::size_t>(t)] = numeric_fs_metric(f, xi).g;
      scalars[static_cast<std::size_t>(t)] = curvature_at(metric_field(f, 1.0, 1e-3), xi).scalar;
    });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < kThreads; ++t) {
    EXPECT_EQ(metrics[static_cast<std::size_t>(t)], ref_metric);
    EXPECT_EQ(scalars[static_cast<std::size_t>(t)], ref_scalar);
  }
}

}  // namespace
}  // namespace qgeom
