// Copyright 2026 The gaussbell Authors
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

#include "testing/oracles.hpp"

#include <cmath>

namespace gaussbell::testing {

double min_eigenvalue_hermitian_2x2(const Mat2& re, const Mat2& im) {
  // [[a, b + i c], [b - i c, d]]
  const double a = re(0, 0);
  const double d = re(1, 1);
  const double b = re(0, 1);
  const double c = im(0, 1);
  const double half_gap = 0.5 * (a - d);
  return 0.5 * (a + d) - std::sqrt(half_gap * half_gap + b * b + c * c);
}

MixedBlocks mixed_blocks(const BlockPartition& p, double t) {
  const double st = std::sqrt(t);
  const double sr = std::sqrt(1.0 - t);
  const double x = std::sqrt(t * (1.0 - t));
  const Mat2 d_sum = p.D + p.D.transpose();
  MixedBlocks m;
  m.C1 = st * p.C1 + sr * p.C2;
  m.C2 = -sr * p.C1 + st * p.C2;
  m.B1 = t * p.B1 + (1.0 - t) * p.B2 + x * d_sum;
  m.B2 = t * p.B2 + (1.0 - t) * p.B1 - x * d_sum;
  m.D = x * (p.B2 - p.B1) + t * p.D - (1.0 - t) * p.D.transpose();
  return m;
}

Mat2 random_positive_definite(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Mat2 g{{u(rng), u(rng)}, {u(rng), u(rng)}};
  return g * g.transpose() + 0.05 * Mat2::Identity();
}

DetectionCase random_case(std::mt19937_64& rng, bool ideal) {
  std::uniform_int_distribution<std::size_t> kept(1, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> efficiency(0.1, 1.0);
  const std::size_t n = kept(rng);
  const std::uint64_t seed = rng();
  const double t = unit(rng);
  const double eta = ideal ? 1.0 : efficiency(rng);
  const double eta_prime = ideal ? 1.0 : efficiency(rng);
  return {random_cm(n + 2, seed), t, eta, eta_prime};
}

}  // namespace gaussbell::testing
