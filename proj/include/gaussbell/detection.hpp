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

// Conditional covariance matrices after Gaussian measurements.
//
// The measured modes are always the last ones of the input: the last mode
// for homodyne and heterodyne detection, the last two for Bell-like
// detection. Reorder with permute_modes() beforehand to measure others.
// None of the maps takes a measurement outcome: the conditional covariance
// matrix does not depend on it.

#include <optional>
#include <string_view>

#include "gaussbell/gaussian.hpp"
#include "gaussbell/matcore.hpp"

namespace gaussbell {

/// Absolute threshold below which gamma1(eta) or det gamma(eta, eta') is
/// treated as non-positive.
inline constexpr double kDegeneracyTolerance = 1e-12;

/// The symmetric 2x2 matrix gamma = [[gamma1, gamma3], [gamma3, gamma2]]
/// built from the measured block and the beam-splitter transmissivity.
struct GammaMatrix {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma3 = 0.0;

  Mat2 matrix() const;
  double det() const { return gamma1 * gamma2 - gamma3 * gamma3; }

  /// gamma + Phi(eta, eta'): gamma1 += (1-eta)/eta, gamma2 += (1-eta')/eta'.
  GammaMatrix with_efficiency(Efficiency eta, Efficiency eta_prime) const;
};

/// K11, K22 and K12 (K21 = K12^T).
struct KappaSet {
  Mat2 K11;
  Mat2 K22;
  Mat2 K12;

  Mat2 K21() const { return K12.transpose(); }
};

enum class DetectionKind { HomodyneQ, HomodyneP, BellLike, StandardBell, Heterodyne };

std::string_view to_string(DetectionKind kind);

/// A measurement to apply. The transmissivity is present iff the kind is
/// BellLike; StandardBell is the balanced case T = 1/2.
class DetectionSpec {
 public:
  static DetectionSpec homodyne(Quadrature quad, Efficiency eta);
  static DetectionSpec bell_like(Transmissivity t, Efficiency eta,
                                 Efficiency eta_prime);
  static DetectionSpec standard_bell(Efficiency eta, Efficiency eta_prime);
  static DetectionSpec heterodyne(Efficiency eta, Efficiency eta_prime);

  DetectionKind kind() const { return kind_; }
  const std::optional<Transmissivity>& transmissivity() const { return t_; }
  Efficiency eta() const { return eta_; }
  Efficiency eta_prime() const { return eta_prime_; }

  /// Number of trailing modes consumed by the measurement.
  std::size_t measured_modes() const;

 private:
  DetectionSpec(DetectionKind kind, std::optional<Transmissivity> t,
                Efficiency eta, Efficiency eta_prime)
      : kind_(kind), t_(t), eta_(eta), eta_prime_(eta_prime) {}

  DetectionKind kind_;
  std::optional<Transmissivity> t_;
  Efficiency eta_;
  Efficiency eta_prime_;
};

/// Homodyne detection of quadrature `quad` of the last mode with efficiency
/// eta: A - (b + (1-eta)/eta)^-1 C Pi C^T, with b the measured variance.
CovarianceMatrix homodyne(const CovarianceMatrix& v, Quadrature quad,
                          Efficiency eta = Efficiency::ideal());

GammaMatrix gamma_matrix(const BlockPartition& p, Transmissivity t);

/// The K matrices for a (possibly efficiency-shifted) gamma.
KappaSet kappa_matrices(const GammaMatrix& g, Transmissivity t);

/// Bell-like detection of the last two modes: beam splitter of
/// transmissivity T, then q-detection (efficiency eta) of the "-" output and
/// p-detection (efficiency eta') of the "+" output.
///
///   V_out = A - (1 / det gamma(eta, eta')) sum_ij C_i K_ij(eta, eta') C_j^T
///
/// Throws InvalidCovariance if gamma1(eta) or det gamma(eta, eta') is not
/// positive.
CovarianceMatrix bell_like(const CovarianceMatrix& v, Transmissivity t,
                           Efficiency eta = Efficiency::ideal(),
                           Efficiency eta_prime = Efficiency::ideal());

/// Balanced Bell detection in the compact form
/// A - (1 / (2 det gamma)) sum_ij C_i X_i^T gamma X_j C_j^T, with
/// gamma = (Z B1 Z + B2 - Z D - D^T Z) / 2 + Phi(eta, eta').
CovarianceMatrix standard_bell(const CovarianceMatrix& v,
                               Efficiency eta = Efficiency::ideal(),
                               Efficiency eta_prime = Efficiency::ideal());

/// Heterodyne detection of the last mode: a balanced Bell detection of that
/// mode together with an uncorrelated vacuum ancilla.
///
///   V_out = A - C1 [Omega (B1 + 2 Phi) Omega^T + I] C1^T / theta1(eta, eta')
CovarianceMatrix heterodyne(const CovarianceMatrix& v,
                            Efficiency eta = Efficiency::ideal(),
                            Efficiency eta_prime = Efficiency::ideal());

/// State left on one half of epr_cm(mu) after homodyning the other half.
/// For Q: diag((eta + (1-eta) mu) / (eta mu + 1 - eta), mu); P swaps.
CovarianceMatrix remote_state_prep(double mu, Quadrature quad,
                                   Efficiency eta = Efficiency::ideal());

/// Dispatches on spec.kind().
CovarianceMatrix detect(const CovarianceMatrix& v, const DetectionSpec& spec);

}  // namespace gaussbell
