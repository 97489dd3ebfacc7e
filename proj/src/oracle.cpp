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

#include "gaussbell/oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "gaussbell/error.hpp"

namespace gaussbell::oracle {
namespace {

Eigen::Index row_of(std::size_t mode) {
  return static_cast<Eigen::Index>(2 * mode);
}

void require_mode(const CovarianceMatrix& v, std::size_t mode) {
  if (mode >= v.n_modes()) {
    throw InvalidArgument("mode index " + std::to_string(mode) +
                          " out of range for " + std::to_string(v.n_modes()) +
                          " modes");
  }
}

}  // namespace

Mat general_pseudoinverse(const Mat& m) {
  if (m.size() == 0) {
    return Mat(m.cols(), m.rows());
  }
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double cutoff = kPseudoinverseCutoff * sigma(0);
  Eigen::VectorXd inverse = Eigen::VectorXd::Zero(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) {
      inverse(i) = 1.0 / sigma(i);
    }
  }
  return svd.matrixV() * inverse.asDiagonal() * svd.matrixU().transpose();
}

const TraceStep& StepTrace::at(std::string_view label) const {
  for (const TraceStep& step : steps) {
    if (step.label == label) {
      return step;
    }
  }
  throw std::out_of_range("no trace step labelled " + std::string(label));
}

CovarianceMatrix dilate(const CovarianceMatrix& v, std::size_t count) {
  if (count == 0) {
    return v;
  }
  return direct_sum(v, vacuum(count));
}

CovarianceMatrix mix(const CovarianceMatrix& v, std::size_t first,
                     std::size_t second, Transmissivity t) {
  require_mode(v, first);
  require_mode(v, second);
  if (first == second) {
    throw InvalidArgument("beam splitter needs two distinct modes");
  }
  const Mat4 k = beam_splitter(t);
  Mat s = identity_modes(v.n_modes());
  const Eigen::Index a = row_of(first);
  const Eigen::Index b = row_of(second);
  s.block<2, 2>(a, a) = k.block<2, 2>(0, 0);
  s.block<2, 2>(a, b) = k.block<2, 2>(0, 2);
  s.block<2, 2>(b, a) = k.block<2, 2>(2, 0);
  s.block<2, 2>(b, b) = k.block<2, 2>(2, 2);
  return congruence(v, s);
}

CovarianceMatrix trace_out(const CovarianceMatrix& v, std::size_t mode) {
  require_mode(v, mode);
  if (v.n_modes() == 1) {
    throw InsufficientModes("cannot trace out the only mode");
  }
  const Eigen::Index dim = v.dim();
  Eigen::VectorXi keep(dim - 2);
  Eigen::Index next = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i / 2 != static_cast<Eigen::Index>(mode)) {
      keep(next++) = static_cast<int>(i);
    }
  }
  return CovarianceMatrix(v.matrix()(keep, keep));
}

CovarianceMatrix condition_on_mode(const CovarianceMatrix& v, std::size_t mode,
                                   Quadrature quad) {
  require_mode(v, mode);
  if (v.n_modes() == 1) {
    throw InsufficientModes("conditioning needs at least one surviving mode");
  }
  const Eigen::Index dim = v.dim();
  Eigen::VectorXi kept(dim - 2);
  Eigen::Index next = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i / 2 != static_cast<Eigen::Index>(mode)) {
      kept(next++) = static_cast<int>(i);
    }
  }
  Eigen::VectorXi measured(2);
  measured << static_cast<int>(row_of(mode)), static_cast<int>(row_of(mode)) + 1;

  const Mat a = v.matrix()(kept, kept);
  const Mat c = v.matrix()(kept, measured);
  const Mat b = v.matrix()(measured, measured);
  const Mat pi = projector(quad);
  const double variance = (pi * b * pi).trace();
  if (!(variance > 0.0)) {
    throw InvalidCovariance("measured " + std::string(to_string(quad)) +
                            " variance of mode " + std::to_string(mode) +
                            " is not positive: " + std::to_string(variance));
  }
  const Mat gain = general_pseudoinverse(pi * b * pi);
  return CovarianceMatrix(symmetrize(a - c * gain * c.transpose()));
}

StepwiseResult homodyne_stepwise(const CovarianceMatrix& v, Quadrature quad,
                                 Efficiency eta) {
  if (v.n_modes() < 2) {
    throw InsufficientModes("homodyne detection needs at least two modes");
  }
  const std::size_t signal = v.n_modes() - 1;
  const std::size_t environment = signal + 1;

  StepTrace trace;
  trace.record("input", v);
  CovarianceMatrix current = dilate(v, 1);
  trace.record("dilate", current);
  current = mix(current, signal, environment, Transmissivity(eta.value()));
  trace.record("efficiency", current);
  current = condition_on_mode(trace_out(current, environment), signal, quad);
  trace.record("condition", current);
  return {current, std::move(trace)};
}

StepwiseResult bell_like_stepwise(const CovarianceMatrix& v, Transmissivity t,
                                  Efficiency eta, Efficiency eta_prime,
                                  ConditioningOrder order) {
  const BlockPartition checked = partition(v);  // enforces n_modes >= 3
  const std::size_t n = checked.n_kept();
  const std::size_t plus = n;
  const std::size_t minus = n + 1;
  const std::size_t env_minus = n + 2;
  const std::size_t env_plus = n + 3;

  StepTrace trace;
  trace.record("input", v);
  CovarianceMatrix current = dilate(v, 2);
  trace.record("dilate", current);
  current = mix(current, plus, minus, t);
  trace.record("beam_splitter", current);
  current = mix(current, minus, env_minus, Transmissivity(eta.value()));
  current = mix(current, plus, env_plus, Transmissivity(eta_prime.value()));
  trace.record("efficiency", current);

  // Each conditioning step also discards the environment mode of the
  // detector it models.
  if (order == ConditioningOrder::MinusFirst) {
    current = condition_on_mode(trace_out(current, env_minus), minus,
                                Quadrature::Q);
    trace.record("condition_q_minus", current);
    // modes now: kept..., plus, env_plus
    current = condition_on_mode(trace_out(current, plus + 1), plus,
                                Quadrature::P);
    trace.record("condition_p_plus", current);
  } else {
    current =
        condition_on_mode(trace_out(current, env_plus), plus, Quadrature::P);
    trace.record("condition_p_plus", current);
    // modes now: kept..., minus, env_minus
    current = condition_on_mode(trace_out(current, n + 1), n, Quadrature::Q);
    trace.record("condition_q_minus", current);
  }
  return {current, std::move(trace)};
}

}  // namespace gaussbell::oracle
