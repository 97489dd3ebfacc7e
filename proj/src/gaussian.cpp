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

#include "gaussbell/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gaussbell/error.hpp"

namespace gaussbell {
namespace {

std::size_t modes_of(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw MalformedCovariance("covariance matrix must be square, got " +
                              std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()));
  }
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    throw MalformedCovariance(
        "covariance matrix dimension must be a positive even number, got " +
        std::to_string(m.rows()));
  }
  return static_cast<std::size_t>(m.rows() / 2);
}

Mat2 rotation(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return Mat2{{c, s}, {-s, c}};
}

// Left-multiplies the rows of mode k by a 2x2 symplectic block.
void apply_single_mode(Mat& s, std::size_t k, const Mat2& block) {
  const auto row = static_cast<Eigen::Index>(2 * k);
  s.middleRows(row, 2) = block * s.middleRows(row, 2);
}

// Left-multiplies modes (k, k+1) by a 4x4 symplectic block.
void apply_two_mode(Mat& s, std::size_t k, const Mat4& block) {
  const auto row = static_cast<Eigen::Index>(2 * k);
  s.middleRows(row, 4) = block * s.middleRows(row, 4);
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Mat values)
    : n_modes_(modes_of(values)), values_(std::move(values)) {
  require_finite(values_, "covariance matrix");
  values_ = symmetrize(values_);
}

Mat2 CovarianceMatrix::mode_block(std::size_t i, std::size_t j) const {
  return values_.block<2, 2>(static_cast<Eigen::Index>(2 * i),
                             static_cast<Eigen::Index>(2 * j));
}

bool CovarianceMatrix::operator==(const CovarianceMatrix& other) const {
  return n_modes_ == other.n_modes_ && values_ == other.values_;
}

ValidationReport validate(const CovarianceMatrix& v) {
  ValidationReport report;
  report.symmetry_defect = max_abs(v.matrix() - v.matrix().transpose());
  report.min_uncertainty_eigenvalue =
      min_sym_eigenvalue(v.matrix(), symplectic_form(v.n_modes()));
  report.bona_fide = report.min_uncertainty_eigenvalue >= -kBonaFideTolerance;
  return report;
}

ValidationReport validate(const Mat& raw) {
  modes_of(raw);
  require_finite(raw, "covariance matrix");
  const double defect = max_abs(raw - raw.transpose());
  ValidationReport report = validate(CovarianceMatrix(raw));
  report.symmetry_defect = defect;
  return report;
}

void require_bona_fide(const CovarianceMatrix& v) {
  const ValidationReport report = validate(v);
  if (!report.bona_fide) {
    throw InvalidCovariance(
        "matrix violates the uncertainty principle: min eigenvalue of "
        "V + i Omega is " +
        std::to_string(report.min_uncertainty_eigenvalue));
  }
}

Efficiency::Efficiency(double value) : value_(value) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw InvalidEfficiency("efficiency must lie in (0, 1], got " +
                            std::to_string(value));
  }
}

Mat BlockPartition::reassemble() const {
  const Eigen::Index head = A.rows();
  Mat out(head + 4, head + 4);
  out.topLeftCorner(head, head) = A;
  out.block(0, head, head, 2) = C1;
  out.block(0, head + 2, head, 2) = C2;
  out.block(head, 0, 2, head) = C1.transpose();
  out.block(head + 2, 0, 2, head) = C2.transpose();
  out.block<2, 2>(head, head) = B1;
  out.block<2, 2>(head, head + 2) = D;
  out.block<2, 2>(head + 2, head) = D.transpose();
  out.block<2, 2>(head + 2, head + 2) = B2;
  return out;
}

BlockPartition partition(const CovarianceMatrix& v) {
  if (v.n_modes() < 3) {
    throw InsufficientModes(
        "partition needs at least three modes (one survivor plus two "
        "measured), got " +
        std::to_string(v.n_modes()));
  }
  const Mat& m = v.matrix();
  const Eigen::Index head = m.rows() - 4;
  BlockPartition p;
  p.A = m.topLeftCorner(head, head);
  p.C1 = m.block(0, head, head, 2);
  p.C2 = m.block(0, head + 2, head, 2);
  p.B1 = m.block<2, 2>(head, head);
  p.D = m.block<2, 2>(head, head + 2);
  p.B2 = m.block<2, 2>(head + 2, head + 2);
  return p;
}

CovarianceMatrix vacuum(std::size_t n_modes) {
  if (n_modes == 0) {
    throw InvalidArgument("vacuum needs at least one mode");
  }
  return CovarianceMatrix(identity_modes(n_modes));
}

CovarianceMatrix epr_cm(double mu) {
  if (!(mu >= 1.0) || !std::isfinite(mu)) {
    throw InvalidArgument("EPR parameter mu must be finite and >= 1, got " +
                          std::to_string(mu));
  }
  const double s = std::sqrt(mu * mu - 1.0);
  const Mat2 id = Mat2::Identity();
  const Mat2 z = reflection();
  Mat v(4, 4);
  v << mu * id, s * z,  //
      s * z, mu * id;
  return CovarianceMatrix(std::move(v));
}

CovarianceMatrix random_cm(std::size_t n_modes, std::uint64_t seed) {
  if (n_modes == 0) {
    throw InvalidArgument("random_cm needs at least one mode");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> squeeze(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> transmissivity(0.0, 1.0);
  std::uniform_real_distribution<double> thermal(1.0, 3.0);

  Mat s = identity_modes(n_modes);
  for (std::size_t k = 0; k < n_modes; ++k) {
    const double before = angle(rng);
    const double r = squeeze(rng);
    const double after = angle(rng);
    const Mat2 squeezer{{std::exp(r), 0.0}, {0.0, std::exp(-r)}};
    apply_single_mode(s, k, rotation(after) * squeezer * rotation(before));
  }
  for (std::size_t round = 0; round < n_modes; ++round) {
    for (std::size_t k = 0; k + 1 < n_modes; ++k) {
      apply_two_mode(s, k, beam_splitter(Transmissivity(transmissivity(rng))));
    }
    for (std::size_t k = 0; k < n_modes; ++k) {
      apply_single_mode(s, k, rotation(angle(rng)));
    }
  }

  Mat thermal_cm = Mat::Zero(s.rows(), s.cols());
  for (std::size_t k = 0; k < n_modes; ++k) {
    const auto i = static_cast<Eigen::Index>(2 * k);
    const double nu = thermal(rng);
    thermal_cm(i, i) = nu;
    thermal_cm(i + 1, i + 1) = nu;
  }
  return CovarianceMatrix(s * thermal_cm * s.transpose());
}

CovarianceMatrix direct_sum(const CovarianceMatrix& v,
                            const CovarianceMatrix& w) {
  const Eigen::Index a = v.dim();
  const Eigen::Index b = w.dim();
  Mat out = Mat::Zero(a + b, a + b);
  out.topLeftCorner(a, a) = v.matrix();
  out.bottomRightCorner(b, b) = w.matrix();
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix permute_modes(const CovarianceMatrix& v,
                               std::span<const std::size_t> order) {
  const std::size_t n = v.n_modes();
  std::vector<std::size_t> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  bool is_permutation = sorted.size() == n;
  for (std::size_t i = 0; is_permutation && i < n; ++i) {
    is_permutation = sorted[i] == i;
  }
  if (!is_permutation) {
    throw InvalidArgument("mode order must be a permutation of 0.." +
                          std::to_string(n - 1));
  }
  Mat out(v.dim(), v.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.block<2, 2>(static_cast<Eigen::Index>(2 * i),
                      static_cast<Eigen::Index>(2 * j)) =
          v.mode_block(order[i], order[j]);
    }
  }
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix congruence(const CovarianceMatrix& v, const Mat& s) {
  if (s.rows() != v.dim() || s.cols() != v.dim()) {
    throw InvalidArgument("congruence matrix must be " +
                          std::to_string(v.dim()) + "x" +
                          std::to_string(v.dim()));
  }
  return CovarianceMatrix(s * v.matrix() * s.transpose());
}

}  // namespace gaussbell
