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

#include "gaussbell/detection.hpp"

#include <cmath>
#include <string>

#include "gaussbell/error.hpp"

namespace gaussbell {
namespace {

struct LastModeSplit {
  Mat A;
  Mat C;
  Mat2 B;
};

LastModeSplit split_last_mode(const CovarianceMatrix& v, std::string_view op) {
  if (v.n_modes() < 2) {
    throw InsufficientModes(std::string(op) +
                            " needs at least two modes, got " +
                            std::to_string(v.n_modes()));
  }
  const Mat& m = v.matrix();
  const Eigen::Index head = m.rows() - 2;
  return {m.topLeftCorner(head, head), m.topRightCorner(head, 2),
          m.bottomRightCorner<2, 2>()};
}

void require_positive_gamma(const GammaMatrix& g) {
  if (!(g.gamma1 > kDegeneracyTolerance)) {
    throw InvalidCovariance(
        "measured block is not positive definite: gamma1(eta) = " +
        std::to_string(g.gamma1) + " <= 0");
  }
  if (!(g.det() > kDegeneracyTolerance)) {
    throw InvalidCovariance(
        "measured block is not positive definite: det gamma(eta, eta') = " +
        std::to_string(g.det()) + " <= 0");
  }
}

}  // namespace

std::string_view to_string(DetectionKind kind) {
  switch (kind) {
    case DetectionKind::HomodyneQ:
      return "homodyne-q";
    case DetectionKind::HomodyneP:
      return "homodyne-p";
    case DetectionKind::BellLike:
      return "bell";
    case DetectionKind::StandardBell:
      return "standard-bell";
    case DetectionKind::Heterodyne:
      return "heterodyne";
  }
  return "unknown";
}

Mat2 GammaMatrix::matrix() const {
  return Mat2{{gamma1, gamma3}, {gamma3, gamma2}};
}

GammaMatrix GammaMatrix::with_efficiency(Efficiency eta,
                                         Efficiency eta_prime) const {
  return {gamma1 + eta.excess_noise(), gamma2 + eta_prime.excess_noise(),
          gamma3};
}

DetectionSpec DetectionSpec::homodyne(Quadrature quad, Efficiency eta) {
  return {quad == Quadrature::Q ? DetectionKind::HomodyneQ
                                : DetectionKind::HomodyneP,
          std::nullopt, eta, Efficiency::ideal()};
}

DetectionSpec DetectionSpec::bell_like(Transmissivity t, Efficiency eta,
                                       Efficiency eta_prime) {
  return {DetectionKind::BellLike, t, eta, eta_prime};
}

DetectionSpec DetectionSpec::standard_bell(Efficiency eta,
                                           Efficiency eta_prime) {
  return {DetectionKind::StandardBell, std::nullopt, eta, eta_prime};
}

DetectionSpec DetectionSpec::heterodyne(Efficiency eta, Efficiency eta_prime) {
  return {DetectionKind::Heterodyne, std::nullopt, eta, eta_prime};
}

std::size_t DetectionSpec::measured_modes() const {
  switch (kind_) {
    case DetectionKind::BellLike:
    case DetectionKind::StandardBell:
      return 2;
    default:
      return 1;
  }
}

CovarianceMatrix homodyne(const CovarianceMatrix& v, Quadrature quad,
                          Efficiency eta) {
  const LastModeSplit s = split_last_mode(v, "homodyne detection");
  // Check b itself; the shifted variance b + (1-eta)/eta could hide b <= 0.
  projected_pseudoinverse(s.B, quad);
  const Mat2 shifted = s.B + eta.excess_noise() * Mat2::Identity();
  const Mat2 gain = projected_pseudoinverse(shifted, quad);
  return CovarianceMatrix(symmetrize(s.A - s.C * gain * s.C.transpose()));
}

GammaMatrix gamma_matrix(const BlockPartition& p, Transmissivity t) {
  const double tt = t.value();
  const double r = 1.0 - tt;
  const double x = t.cross();
  return {
      r * p.beta1() + tt * p.beta1p() - 2.0 * x * p.delta1(),
      tt * p.beta2() + r * p.beta2p() + 2.0 * x * p.delta2(),
      x * (p.beta3p() - p.beta3()) - r * p.delta3() + tt * p.delta4(),
  };
}

KappaSet kappa_matrices(const GammaMatrix& g, Transmissivity t) {
  const double tt = t.value();
  const double r = 1.0 - tt;
  const double x = t.cross();
  KappaSet k;
  k.K11 = Mat2{{r * g.gamma2, x * g.gamma3}, {x * g.gamma3, tt * g.gamma1}};
  k.K22 = Mat2{{tt * g.gamma2, -x * g.gamma3}, {-x * g.gamma3, r * g.gamma1}};
  k.K12 = Mat2{{-x * g.gamma2, r * g.gamma3}, {-tt * g.gamma3, x * g.gamma1}};
  return k;
}

CovarianceMatrix bell_like(const CovarianceMatrix& v, Transmissivity t,
                           Efficiency eta, Efficiency eta_prime) {
  const BlockPartition p = partition(v);
  const GammaMatrix g = gamma_matrix(p, t).with_efficiency(eta, eta_prime);
  require_positive_gamma(g);
  const KappaSet k = kappa_matrices(g, t);

  const Mat correction = p.C1 * k.K11 * p.C1.transpose() +
                         p.C1 * k.K12 * p.C2.transpose() +
                         p.C2 * k.K21() * p.C1.transpose() +
                         p.C2 * k.K22 * p.C2.transpose();
  return CovarianceMatrix(symmetrize(p.A - correction / g.det()));
}

CovarianceMatrix standard_bell(const CovarianceMatrix& v, Efficiency eta,
                               Efficiency eta_prime) {
  const BlockPartition p = partition(v);
  const Mat2 z = reflection();
  const Mat2 gamma =
      0.5 * (z * p.B1 * z + p.B2 - z * p.D - p.D.transpose() * z) +
      efficiency_shift(eta.excess_noise(), eta_prime.excess_noise());
  require_positive_gamma({gamma(0, 0), gamma(1, 1), gamma(0, 1)});

  const Mat2 x1 = swap_matrix();
  const Mat2 x2 = single_mode_symplectic();
  const Mat correction =
      p.C1 * (x1.transpose() * gamma * x1) * p.C1.transpose() +
      p.C1 * (x1.transpose() * gamma * x2) * p.C2.transpose() +
      p.C2 * (x2.transpose() * gamma * x1) * p.C1.transpose() +
      p.C2 * (x2.transpose() * gamma * x2) * p.C2.transpose();
  return CovarianceMatrix(
      symmetrize(p.A - correction / (2.0 * gamma.determinant())));
}

CovarianceMatrix heterodyne(const CovarianceMatrix& v, Efficiency eta,
                            Efficiency eta_prime) {
  const LastModeSplit s = split_last_mode(v, "heterodyne detection");
  const Mat2 phi =
      efficiency_shift(eta.excess_noise(), eta_prime.excess_noise());
  const Mat2 omega = single_mode_symplectic();

  // gamma = (Z B1 Z + I) / 2 + Phi for the vacuum ancilla; det gamma equals
  // theta1(eta, eta') / 4.
  const double gamma1 = 0.5 * (s.B(0, 0) + 1.0) + phi(0, 0);
  const double theta = s.B.determinant() + s.B.trace() + 1.0 +
                       4.0 * phi.determinant() + 2.0 * phi.trace() +
                       2.0 * (omega * phi * omega.transpose() * s.B).trace();
  if (!(gamma1 > kDegeneracyTolerance)) {
    throw InvalidCovariance(
        "measured block is not positive definite: gamma1(eta) = " +
        std::to_string(gamma1) + " <= 0");
  }
  if (!(theta / 4.0 > kDegeneracyTolerance)) {
    throw InvalidCovariance(
        "measured block is not positive definite: det gamma(eta, eta') = " +
        std::to_string(theta / 4.0) + " <= 0");
  }

  const Mat2 bracket =
      omega * (s.B + 2.0 * phi) * omega.transpose() + Mat2::Identity();
  return CovarianceMatrix(
      symmetrize(s.A - s.C * bracket * s.C.transpose() / theta));
}

CovarianceMatrix remote_state_prep(double mu, Quadrature quad,
                                   Efficiency eta) {
  if (!(mu >= 1.0) || !std::isfinite(mu)) {
    throw InvalidArgument("EPR parameter mu must be finite and >= 1, got " +
                          std::to_string(mu));
  }
  const double e = eta.value();
  const double squeezed = (e + (1.0 - e) * mu) / (e * mu + 1.0 - e);
  Mat out = Mat::Zero(2, 2);
  out(0, 0) = quad == Quadrature::Q ? squeezed : mu;
  out(1, 1) = quad == Quadrature::Q ? mu : squeezed;
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix detect(const CovarianceMatrix& v, const DetectionSpec& spec) {
  switch (spec.kind()) {
    case DetectionKind::HomodyneQ:
      return homodyne(v, Quadrature::Q, spec.eta());
    case DetectionKind::HomodyneP:
      return homodyne(v, Quadrature::P, spec.eta());
    case DetectionKind::BellLike:
      return bell_like(v, *spec.transmissivity(), spec.eta(),
                       spec.eta_prime());
    case DetectionKind::StandardBell:
      return standard_bell(v, spec.eta(), spec.eta_prime());
    case DetectionKind::Heterodyne:
      return heterodyne(v, spec.eta(), spec.eta_prime());
  }
  throw InvalidArgument("unknown detection kind");
}

}  // namespace gaussbell
