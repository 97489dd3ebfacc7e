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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "gaussbell/matcore.hpp"

namespace gaussbell {

/// Absolute tolerance on the minimum eigenvalue of V + i Omega.
inline constexpr double kBonaFideTolerance = 1e-9;

/// Second moments of an n-mode Gaussian state, 2n x 2n, ordered
/// (q1, p1, ..., qn, pn). Construction checks the shape and finiteness and
/// symmetrizes; it does not enforce the uncertainty principle, which is
/// reported by validate().
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Mat values);

  std::size_t n_modes() const { return n_modes_; }
  Eigen::Index dim() const { return values_.rows(); }
  const Mat& matrix() const { return values_; }

  /// 2x2 block coupling mode i to mode j (zero-based).
  Mat2 mode_block(std::size_t i, std::size_t j) const;

  /// Exact entrywise equality.
  bool operator==(const CovarianceMatrix& other) const;

 private:
  std::size_t n_modes_;
  Mat values_;
};

struct ValidationReport {
  double symmetry_defect = 0.0;
  /// Smallest eigenvalue of V + i Omega.
  double min_uncertainty_eigenvalue = 0.0;
  bool bona_fide = false;
};

/// Checks V + i Omega >= 0 within kBonaFideTolerance.
ValidationReport validate(const CovarianceMatrix& v);

/// Same check on a raw matrix; the symmetry defect is measured before the
/// matrix is symmetrized. Throws MalformedCovariance on odd or non-square
/// input.
ValidationReport validate(const Mat& raw);

/// Throws InvalidCovariance unless validate(v).bona_fide.
void require_bona_fide(const CovarianceMatrix& v);

/// Homodyne detector efficiency, 0 < eta <= 1.
class Efficiency {
 public:
  explicit Efficiency(double value);
  static Efficiency ideal() { return Efficiency(1.0); }

  double value() const { return value_; }
  /// (1 - eta) / eta, the vacuum noise added to the measured variance. Zero
  /// exactly at eta = 1.
  double excess_noise() const { return (1.0 - value_) / value_; }

 private:
  double value_;
};

/// Blocks of an (n+2)-mode matrix relative to its last two modes:
///
///   [[A,    C1,  C2],
///    [C1^T, B1,  D ],
///    [C2^T, D^T, B2]]
struct BlockPartition {
  Mat A;
  Mat C1;
  Mat C2;
  Mat2 B1;
  Mat2 B2;
  Mat2 D;

  double beta1() const { return B1(0, 0); }
  double beta2() const { return B1(1, 1); }
  double beta3() const { return B1(0, 1); }
  double beta1p() const { return B2(0, 0); }
  double beta2p() const { return B2(1, 1); }
  double beta3p() const { return B2(0, 1); }
  double delta1() const { return D(0, 0); }
  double delta2() const { return D(1, 1); }
  double delta3() const { return D(0, 1); }
  double delta4() const { return D(1, 0); }

  /// n, the number of surviving modes.
  std::size_t n_kept() const { return static_cast<std::size_t>(A.rows() / 2); }

  Mat reassemble() const;
};

/// Throws InsufficientModes unless v has at least three modes.
BlockPartition partition(const CovarianceMatrix& v);

/// Vacuum of n modes, V = I.
CovarianceMatrix vacuum(std::size_t n_modes);

/// Two-mode squeezed vacuum [[mu I, s Z], [s Z, mu I]], s = sqrt(mu^2 - 1).
CovarianceMatrix epr_cm(double mu);

/// Random bona fide n-mode matrix S diag(nu_k I) S^T, deterministic in seed.
/// S composes single-mode rotations and squeezers (r in [-1, 1]) with
/// beam splitters between neighbouring modes; thermal variances nu_k lie in
/// [1, 3].
CovarianceMatrix random_cm(std::size_t n_modes, std::uint64_t seed);

/// V (+) W.
CovarianceMatrix direct_sum(const CovarianceMatrix& v,
                            const CovarianceMatrix& w);

/// Reorders modes: mode i of the result is mode order[i] of v. `order` must
/// be a permutation of 0..n-1.
CovarianceMatrix permute_modes(const CovarianceMatrix& v,
                               std::span<const std::size_t> order);

/// S V S^T for a 2n x 2n matrix S.
CovarianceMatrix congruence(const CovarianceMatrix& v, const Mat& s);

}  // namespace gaussbell
