// Copyright 2026 The entrosep authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "entrosep/entropy.hpp"
#include "entrosep/linalg.hpp"
#include "entrosep/majorization.hpp"
#include "entrosep/measurements.hpp"

namespace entrosep {

/// A criterion must be violated beyond numerical noise to count.
inline constexpr double kViolationTol = 1e-9;

enum class EntropyKind { kRenyi, kTsallis };

/// One separability test. margin is the signed slack towards violation:
/// observed - bound for entropy criteria (lower bounds), bound - observed for
/// the correlation measure (an upper bound); violated <=> margin < -1e-9.
/// side records which subsystem's bound was used ('A', 'B', or '-' when the
/// bound is side-independent).
struct CriterionReport {
  std::string criterion_id;
  std::vector<std::pair<std::string, double>> params;
  double observed = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool violated = false;
  char side = '-';
};

using LocalMeasurement = std::variant<RankOnePovm, GeneralPovm>;

std::size_t local_dim(const LocalMeasurement& m);
std::size_t local_outcomes(const LocalMeasurement& m);
std::vector<Matrix> local_elements(const LocalMeasurement& m);
const RankOnePovm* as_rank_one(const LocalMeasurement& m);

/// Joint POVM Pi_k = sum_i N_{A,i} (x) N_{B,k-i mod D} built from one local
/// pair; keeps the locals so criteria can derive their side bounds.
struct ConvolutionPovm {
  std::size_t outcome_count = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::vector<Matrix> elements;
  LocalMeasurement local_a;
  LocalMeasurement local_b;
};

/// Requires equal outcome counts and equal local dimensions.
ConvolutionPovm build_convolution_povm(const LocalMeasurement& na, const LocalMeasurement& nb);

ProbabilityVector probabilities(const ConvolutionPovm& m, const DensityMatrix& rho);

/// Maassen-Uffink-type test: R_alpha(M1) + R_beta(M2) >= -2 ln eta_S, or the
/// Tsallis analogue with order max{alpha, beta}. Needs 1/alpha + 1/beta = 2
/// and rank-one locals. The larger of the two side bounds is reported.
CriterionReport mu_criterion(const ConvolutionPovm& m1, const ConvolutionPovm& m2,
                             const DensityMatrix& rho, EntropyOrder alpha, EntropyOrder beta,
                             EntropyKind kind);

/// Majorization test against R_alpha(w_S) / H_alpha(w_S). The Renyi form is
/// restricted to 0 < alpha <= 1; Tsallis admits any alpha > 0.
CriterionReport maj_criterion(const ConvolutionPovm& m1, const ConvolutionPovm& m2,
                              const DensityMatrix& rho, EntropyOrder alpha, EntropyKind kind);

enum class QubitMajVariant { kA, kB };

/// Two-qubit Renyi variants for 1 < alpha <= 2 and orthonormal local bases:
/// variant A bounds by (2/(1-alpha)) ln((1 + ||w_S||_alpha^alpha)/2),
/// variant B by R_alpha(w'_S).
CriterionReport maj_criterion_qubit(const ConvolutionPovm& m1, const ConvolutionPovm& m2,
                                    const DensityMatrix& rho, EntropyOrder alpha,
                                    QubitMajVariant variant);

/// K MUB-pair measurements against ln_alpha(Kd/(d+K-1)) (Tsallis, alpha <= 2)
/// or ln(Kd/(d+K-1)) (Renyi; alpha <= 1, extended to alpha <= 2 when d = 2).
CriterionReport mub_criterion(const std::vector<ConvolutionPovm>& ms, const DensityMatrix& rho,
                              EntropyOrder alpha, EntropyKind kind);

/// K MUM-pair measurements against ln_alpha(Kd/(kappa_S d + K - 1)); the
/// efficiencies are measured from the stored local elements and validated.
CriterionReport mum_criterion(const std::vector<ConvolutionPovm>& ms, const DensityMatrix& rho,
                              EntropyOrder alpha);

/// Single SIC-pair measurement against ln_alpha(d(d+1)/2).
CriterionReport sic_criterion(const ConvolutionPovm& m, const DensityMatrix& rho,
                              EntropyOrder alpha);

/// Single general-SIC-pair measurement against ln_alpha(d(d+1)/(a_S d^2 + 1)).
CriterionReport gsic_criterion(const ConvolutionPovm& m, const DensityMatrix& rho,
                               EntropyOrder alpha);

/// One local basis pair with an outcome pairing: outcome i of the A basis is
/// matched with outcome pairing[i] of the B basis.
struct BasisPairing {
  RankOnePovm basis_a;
  RankOnePovm basis_b;
  std::vector<std::size_t> pairing;  // empty = identity
};

struct CorrelationResult {
  double j = 0.0;
  double bound = 0.0;
  bool violated = false;
};

/// Correlation measure J = sum_t sum_i <a_i b_{pi(i)}|rho|a_i b_{pi(i)}>
/// against the separable bound 1 + (K-1)/d. Local bases must form MUBs on
/// each side.
CorrelationResult correlation_measure(const std::vector<BasisPairing>& pairs,
                                      const DensityMatrix& rho);

CriterionReport correlation_report(const std::vector<BasisPairing>& pairs,
                                   const DensityMatrix& rho);

}  // namespace entrosep
