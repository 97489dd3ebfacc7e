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

#include "gaussbell/matcore.hpp"

#include <cmath>
#include <string>

#include "gaussbell/error.hpp"

namespace gaussbell {

std::string_view to_string(Quadrature quad) {
  return quad == Quadrature::Q ? "q" : "p";
}

Transmissivity::Transmissivity(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InvalidArgument("transmissivity must lie in [0, 1], got " +
                          std::to_string(value));
  }
}

double Transmissivity::cross() const {
  return std::sqrt(value_ * (1.0 - value_));
}

void require_finite(const Mat& m, std::string_view what) {
  if (!m.allFinite()) {
    throw MalformedCovariance(std::string(what) +
                              " contains non-finite entries");
  }
}

Mat symmetrize(const Mat& m) { return 0.5 * (m + m.transpose()); }

double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_relative_deviation(const Mat& actual, const Mat& reference) {
  if (actual.rows() != reference.rows() || actual.cols() != reference.cols()) {
    throw InvalidArgument("cannot compare matrices of different shapes");
  }
  const double scale = max_abs(reference);
  const double deviation = max_abs(actual - reference);
  return scale > 0.0 ? deviation / scale : deviation;
}

Mat symplectic_form(std::size_t n_modes) {
  if (n_modes == 0) {
    throw InvalidArgument("symplectic form needs at least one mode");
  }
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  Mat omega = Mat::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; k += 2) {
    omega(k, k + 1) = 1.0;
    omega(k + 1, k) = -1.0;
  }
  return omega;
}

Mat identity_modes(std::size_t n_modes) {
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  return Mat::Identity(dim, dim);
}

Mat4 beam_splitter(Transmissivity t) {
  const double a = std::sqrt(t.value());
  const double b = std::sqrt(1.0 - t.value());
  const Mat2 id = Mat2::Identity();
  Mat4 k;
  k << a * id, b * id,  //
      -b * id, a * id;
  return k;
}

Mat embed_last_two(const Mat4& s4, std::size_t n_modes) {
  const auto head = static_cast<Eigen::Index>(2 * n_modes);
  Mat out = Mat::Identity(head + 4, head + 4);
  out.bottomRightCorner<4, 4>() = s4;
  return out;
}

Mat2 projector(Quadrature quad) {
  return quad == Quadrature::Q ? Mat2{{1.0, 0.0}, {0.0, 0.0}}
                               : Mat2{{0.0, 0.0}, {0.0, 1.0}};
}

Mat2 reflection() { return Mat2{{1.0, 0.0}, {0.0, -1.0}}; }

Mat2 swap_matrix() { return Mat2{{0.0, 1.0}, {1.0, 0.0}}; }

Mat2 single_mode_symplectic() { return Mat2{{0.0, 1.0}, {-1.0, 0.0}}; }

Mat2 efficiency_shift(double shift_q, double shift_p) {
  return Mat2{{shift_q, 0.0}, {0.0, shift_p}};
}

Mat2 projected_pseudoinverse(const Mat2& b, Quadrature quad) {
  const double diag = quad == Quadrature::Q ? b(0, 0) : b(1, 1);
  if (!(diag > 0.0)) {
    throw InvalidCovariance(
        "measured-mode variance of the " + std::string(to_string(quad)) +
        " quadrature must be positive, got " + std::to_string(diag));
  }
  return projector(quad) / diag;
}

double min_sym_eigenvalue(const Mat& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidArgument("eigenvalue check needs a non-empty square matrix");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("symmetric eigensolver did not converge");
  }
  return solver.eigenvalues().minCoeff();
}

double min_sym_eigenvalue(const Mat& re, const Mat& im) {
  if (re.rows() != re.cols() || im.rows() != im.cols() ||
      re.rows() != im.rows()) {
    throw InvalidArgument(
        "Hermitian eigenvalue check needs square real and imaginary parts of "
        "equal size");
  }
  const Eigen::Index dim = re.rows();
  Mat embedded(2 * dim, 2 * dim);
  embedded << re, -im,  //
      im, re;
  return min_sym_eigenvalue(embedded);
}

}  // namespace gaussbell
