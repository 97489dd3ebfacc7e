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

// Randomized invariants. Each property draws its inputs from a fixed seed so
// failures reproduce.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gaussbell/detection.hpp"
#include "gaussbell/gaussian.hpp"
#include "gaussbell/oracle.hpp"
#include "testing/oracles.hpp"

namespace gaussbell {
namespace {

// Random symplectic built from beam splitters on arbitrary mode pairs and
// squeezed, rotated single modes, composed independently of random_cm.
Mat random_symplectic(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> r(-0.8, 0.8);
  std::uniform_int_distribution<std::size_t> mode(0, n - 1);
  Mat s = identity_modes(n);
  for (int layer = 0; layer < 6; ++layer) {
    const std::size_t k = mode(rng);
    const double phi = 2.0 * M_PI * unit(rng);
    const double sq = r(rng);
    Mat local = identity_modes(n);
    const Mat2 rot{{std::cos(phi), std::sin(phi)}, {-std::sin(phi), std::cos(phi)}};
    local.block<2, 2>(2 * k, 2 * k) =
        Mat2{{std::exp(sq), 0.0}, {0.0, std::exp(-sq)}} * rot;
    s = local * s;
    if (n > 1) {
      const std::size_t a = mode(rng);
      const std::size_t b = (a + 1 + mode(rng) % (n - 1)) % n;
      const Mat4 k4 = beam_splitter(Transmissivity(unit(rng)));
      Mat bs = identity_modes(n);
      bs.block<2, 2>(2 * a, 2 * a) = k4.block<2, 2>(0, 0);
      bs.block<2, 2>(2 * a, 2 * b) = k4.block<2, 2>(0, 2);
      bs.block<2, 2>(2 * b, 2 * a) = k4.block<2, 2>(2, 0);
      bs.block<2, 2>(2 * b, 2 * b) = k4.block<2, 2>(2, 2);
      s = bs * s;
    }
  }
  return s;
}

TEST(Property, RandomCmIsAlwaysBonaFide) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const ValidationReport r = validate(random_cm(n, seed));
      ASSERT_TRUE(r.bona_fide) << "n=" << n << " seed=" << seed << " min eig "
                               << r.min_uncertainty_eigenvalue;
    }
  }
}

TEST(Property, SymplecticCongruencePreservesBonaFide) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Mat s = random_symplectic(n, rng);
    const Mat omega = symplectic_form(n);
    ASSERT_LT(max_abs(s * omega * s.transpose() - omega), 1e-10);
    const CovarianceMatrix v = random_cm(n, rng());
    EXPECT_TRUE(validate(congruence(v, s)).bona_fide);
  }
}

TEST(Property, PartitionReassembleIsIdentity) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CovarianceMatrix v = random_cm(3 + seed % 4, seed);
    ASSERT_EQ(partition(v).reassemble(), v.matrix());
  }
}

TEST(Property, IdealEfficiencyIsTheUnshiftedFormula) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const testing::DetectionCase c = testing::random_case(rng, true);
    const Transmissivity t(c.t);
    const BlockPartition p = partition(c.v);
    const GammaMatrix g = gamma_matrix(p, t);
    const KappaSet k = kappa_matrices(g, t);
    const Mat sum = p.C1 * k.K11 * p.C1.transpose() +
                    p.C1 * k.K12 * p.C2.transpose() +
                    p.C2 * k.K21() * p.C1.transpose() +
                    p.C2 * k.K22 * p.C2.transpose();
    const Mat ideal = symmetrize(p.A - sum / g.det());
    EXPECT_LT(max_abs(bell_like(c.v, t, Efficiency(1.0), Efficiency(1.0)).matrix() -
                      ideal),
              1e-14);
  }
}

TEST(Property, OutputsAreExactlySymmetric) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const testing::DetectionCase c = testing::random_case(rng, false);
    const Efficiency eta(c.eta), eta_prime(c.eta_prime);
    for (const CovarianceMatrix& out :
         {bell_like(c.v, Transmissivity(c.t), eta, eta_prime),
          standard_bell(c.v, eta, eta_prime), heterodyne(c.v, eta, eta_prime),
          homodyne(c.v, Quadrature::Q, eta), homodyne(c.v, Quadrature::P, eta)}) {
      ASSERT_EQ(out.matrix(), out.matrix().transpose());
    }
  }
}

TEST(Property, HomodyneAndHeterodyneOutputsAreBonaFide) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const testing::DetectionCase c = testing::random_case(rng, false);
    const Efficiency eta(c.eta), eta_prime(c.eta_prime);
    EXPECT_TRUE(validate(homodyne(c.v, Quadrature::Q, eta)).bona_fide);
    EXPECT_TRUE(validate(homodyne(c.v, Quadrature::P, eta)).bona_fide);
    EXPECT_TRUE(validate(heterodyne(c.v, eta, eta_prime)).bona_fide);
  }
}

TEST(Property, HomodyneMatchesOracleOnArbitraryInputs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const testing::DetectionCase c = testing::random_case(rng, false);
    const Quadrature quad = trial % 2 ? Quadrature::Q : Quadrature::P;
    const auto ref =
        oracle::homodyne_stepwise(c.v, quad, Efficiency(c.eta));
    EXPECT_LT(max_abs(homodyne(c.v, quad, Efficiency(c.eta)).matrix() -
                      ref.output.matrix()),
              1e-12 * (1.0 + max_abs(ref.output.matrix())));
  }
}

TEST(Property, HomodyneCommutesAcrossModes) {
  // Conditioning two different modes in either order gives the same state.
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const CovarianceMatrix v = random_cm(3 + trial % 2, rng());
    const std::size_t last = v.n_modes() - 1;
    const CovarianceMatrix a = oracle::condition_on_mode(
        oracle::condition_on_mode(v, last, Quadrature::Q), last - 1,
        Quadrature::P);
    const CovarianceMatrix b = oracle::condition_on_mode(
        oracle::condition_on_mode(v, last - 1, Quadrature::P), last - 1,
        Quadrature::Q);
    EXPECT_LT(max_relative_deviation(a.matrix(), b.matrix()), 1e-10);
  }
}

TEST(Property, LowerEfficiencyNeverReducesVariance) {
  // Less information means a larger (in the PSD order) conditional matrix.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const testing::DetectionCase c = testing::random_case(rng, false);
    const Transmissivity t(c.t);
    const Mat sharp = bell_like(c.v, t, Efficiency(c.eta), Efficiency(c.eta_prime)).matrix();
    const Mat blurred = bell_like(c.v, t, Efficiency(0.5 * c.eta),
                                  Efficiency(0.5 * c.eta_prime))
                            .matrix();
    EXPECT_GE(min_sym_eigenvalue(blurred - sharp), -1e-10);
    EXPECT_GE(min_sym_eigenvalue(partition(c.v).A - blurred), -1e-10);
  }
}

}  // namespace
}  // namespace gaussbell
