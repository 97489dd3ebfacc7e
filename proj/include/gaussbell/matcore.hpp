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

// Small dense real-matrix primitives shared by the rest of the library.
//
// Conventions: quadratures are ordered (q1, p1, ..., qn, pn) and the vacuum
// covariance matrix is the identity (shot-noise units, hbar = 2). Libraries
// that normalise the vacuum to I/2 differ from these matrices by a factor 2.

#include <Eigen/Dense>

#include <cstddef>
#include <string_view>

namespace gaussbell {

using Mat = Eigen::MatrixXd;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

enum class Quadrature { Q, P };

std::string_view to_string(Quadrature quad);

/// Beam-splitter transmissivity, 0 <= T <= 1.
class Transmissivity {
 public:
  explicit Transmissivity(double value);

  double value() const { return value_; }
  /// sqrt(T (1 - T)), the cross coefficient appearing in every mixing formula.
  double cross() const;

 private:
  double value_;
};

/// Throws MalformedCovariance if any entry is NaN or infinite.
void require_finite(const Mat& m, std::string_view what);

/// (M + M^T) / 2.
Mat symmetrize(const Mat& m);

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const Mat& m);

/// max |actual - reference| / max |reference|, the entrywise deviation
/// relative to the reference's scale. Shapes must match.
double max_relative_deviation(const Mat& actual, const Mat& reference);

/// The n-mode symplectic form, a direct sum of n copies of [[0, 1], [-1, 0]].
Mat symplectic_form(std::size_t n_modes);

/// 2n x 2n identity.
Mat identity_modes(std::size_t n_modes);

/// K(T) = [[sqrt(T) I, sqrt(1-T) I], [-sqrt(1-T) I, sqrt(T) I]].
Mat4 beam_splitter(Transmissivity t);

/// I^(n) (+) S4: acts with S4 on the last two of n + 2 modes.
Mat embed_last_two(const Mat4& s4, std::size_t n_modes);

/// Pi = diag(1, 0) for Q, Pi' = diag(0, 1) for P.
Mat2 projector(Quadrature quad);

/// Z = diag(1, -1).
Mat2 reflection();

/// X1 = [[0, 1], [1, 0]].
Mat2 swap_matrix();

/// X2 = [[0, 1], [-1, 0]], equal to the single-mode symplectic form.
Mat2 single_mode_symplectic();

/// Phi(eta, eta') = diag((1-eta)/eta, (1-eta')/eta'), given the two shifts.
Mat2 efficiency_shift(double shift_q, double shift_p);

/// Pseudoinverse of the rank-one matrix Pi B Pi (or Pi' B Pi'), using
/// (x Pi)^+ = x^-1 Pi. Throws InvalidCovariance when the selected diagonal
/// entry of B is not strictly positive.
Mat2 projected_pseudoinverse(const Mat2& b, Quadrature quad);

/// Smallest eigenvalue of a real symmetric matrix.
double min_sym_eigenvalue(const Mat& m);

/// Smallest eigenvalue of the Hermitian matrix re + i im, computed from the
/// real symmetric embedding [[re, -im], [im, re]] (same spectrum, each
/// eigenvalue doubled).
double min_sym_eigenvalue(const Mat& re, const Mat& im);

}  // namespace gaussbell
