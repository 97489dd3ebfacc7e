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

// Stepwise reference for the closed-form detection maps.
//
// Everything here goes the long way round: detector inefficiency is a real
// beam splitter against an appended vacuum mode, and each homodyne
// conditioning uses a general SVD pseudoinverse of the projected block. None
// of the closed-form shortcuts in detection.hpp are used, so agreement
// between the two is a meaningful check.

#include <cstddef>
#include <string>
#include <vector>

#include "gaussbell/gaussian.hpp"
#include "gaussbell/matcore.hpp"

namespace gaussbell::oracle {

/// Relative SVD cutoff: singular values below this times the largest are
/// treated as zero.
inline constexpr double kPseudoinverseCutoff = 1e-12;

/// Moore-Penrose pseudoinverse via singular value decomposition.
Mat general_pseudoinverse(const Mat& m);

struct TraceStep {
  std::string label;
  CovarianceMatrix cm;
};

/// Labelled intermediate covariance matrices, in order of application.
struct StepTrace {
  std::vector<TraceStep> steps;

  void record(std::string label, const CovarianceMatrix& cm) {
    steps.push_back({std::move(label), cm});
  }
  /// First step with the given label; throws std::out_of_range if absent.
  const TraceStep& at(std::string_view label) const;
};

struct StepwiseResult {
  CovarianceMatrix output;
  StepTrace trace;
};

/// Appends `count` vacuum modes.
CovarianceMatrix dilate(const CovarianceMatrix& v, std::size_t count);

/// Beam splitter K(T) acting on modes (first, second), which need not be
/// adjacent.
CovarianceMatrix mix(const CovarianceMatrix& v, std::size_t first,
                     std::size_t second, Transmissivity t);

/// Deletes the rows and columns of one mode.
CovarianceMatrix trace_out(const CovarianceMatrix& v, std::size_t mode);

/// Ideal homodyne detection of quadrature `quad` on an arbitrary mode:
/// A - C (Pi B Pi)^+ C^T with the general pseudoinverse.
CovarianceMatrix condition_on_mode(const CovarianceMatrix& v, std::size_t mode,
                                   Quadrature quad);

/// Homodyne detection of the last mode: dilate with a vacuum, mix signal and
/// vacuum on a transmissivity-eta beam splitter, discard the environment,
/// condition.
StepwiseResult homodyne_stepwise(const CovarianceMatrix& v, Quadrature quad,
                                 Efficiency eta);

enum class ConditioningOrder { MinusFirst, PlusFirst };

/// Bell-like detection of the last two modes. Trace labels:
/// "input", "dilate", "beam_splitter", "efficiency", then "condition_q_minus"
/// and "condition_p_plus" in the requested order.
StepwiseResult bell_like_stepwise(
    const CovarianceMatrix& v, Transmissivity t, Efficiency eta,
    Efficiency eta_prime,
    ConditioningOrder order = ConditioningOrder::MinusFirst);

}  // namespace gaussbell::oracle
