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
#include <vector>

#include "entrosep/entropy.hpp"
#include "entrosep/linalg.hpp"

namespace entrosep {

/// Tolerance on resolution-of-identity and overlap conditions.
inline constexpr double kMeasurementTol = 1e-9;

/// One validated condition: name, worst observed deviation, allowed deviation.
struct ValidationCondition {
  std::string name;
  double deviation = 0.0;
  double tolerance = kMeasurementTol;
  bool pass = true;
};

struct ValidationReport {
  bool pass = true;
  double worst = 0.0;
  std::vector<ValidationCondition> conditions;

  void add(std::string name, double deviation, double tolerance = kMeasurementTol);
  std::string summary() const;
};

/// D subnormalized vectors |f_i> with sum_i |f_i><f_i| = I_d. An orthonormal
/// basis is the special case D = d with unit vectors.
class RankOnePovm {
 public:
  static RankOnePovm make(std::size_t dim, std::vector<Vector> vectors);

  std::size_t dim() const { return dim_; }
  std::size_t outcome_count() const { return vectors_.size(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const Vector& vector(std::size_t i) const { return vectors_[i]; }
  bool is_orthonormal_basis() const;
  std::vector<Matrix> element_matrices() const;

 private:
  RankOnePovm(std::size_t dim, std::vector<Vector> vectors)
      : dim_(dim), vectors_(std::move(vectors)) {}
  std::size_t dim_;
  std::vector<Vector> vectors_;
};

/// PSD operators resolving the identity.
class GeneralPovm {
 public:
  static GeneralPovm make(std::size_t dim, std::vector<Matrix> elements);

  std::size_t dim() const { return dim_; }
  std::size_t outcome_count() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }

 private:
  GeneralPovm(std::size_t dim, std::vector<Matrix> elements)
      : dim_(dim), elements_(std::move(elements)) {}
  std::size_t dim_;
  std::vector<Matrix> elements_;
};

/// K mutually unbiased measurements of common efficiency kappa in (1/d, 1].
struct MumSet {
  std::vector<GeneralPovm> povms;
  double kappa = 1.0;
};

/// d^2-element POVM with constant purity a = Tr(N_i^2) in (1/d^3, 1/d^2].
struct GeneralSic {
  GeneralPovm povm;
  double purity_a = 0.0;
};

// --- validators (report, never throw on math failure) ---

ValidationReport validate_rank_one_povm(std::size_t dim, const std::vector<Vector>& vectors);
ValidationReport validate_general_povm(std::size_t dim, const std::vector<Matrix>& elements);
ValidationReport validate_mub_pair(const RankOnePovm& e1, const RankOnePovm& e2);
ValidationReport validate_mum(const std::vector<GeneralPovm>& povms, double kappa);
ValidationReport validate_sic(const RankOnePovm& f);
ValidationReport validate_gsic(const GeneralPovm& povm, double purity_a);

// --- outcome statistics ---

ProbabilityVector probabilities(const RankOnePovm& m, const DensityMatrix& rho);
ProbabilityVector probabilities(const GeneralPovm& m, const DensityMatrix& rho);

/// Maximal overlap max_{i,j} |<f_i|g_j>|.
double eta(const RankOnePovm& f, const RankOnePovm& g);

/// D x D matrix of inner products <f_i|g_j>.
Matrix overlap_matrix(const RankOnePovm& f, const RankOnePovm& g);

/// Sum of squared probabilities.
double index_of_coincidence(const ProbabilityVector& p);

// --- generalized Pauli operators and bases ---

Matrix gen_pauli_z(std::size_t d);
Matrix gen_pauli_x(std::size_t d);

/// Computational (Z eigen-) basis of dimension d.
RankOnePovm computational_basis(std::size_t d);

/// X eigenbasis labeled so that X|x_k> = omega^k |x_k>.
RankOnePovm pauli_x_basis(std::size_t d);

// --- constructors ---

/// {cos t |z0> + sin t |z1>, sin t |z0> - cos t |z1>}, t in (0, pi/2).
RankOnePovm rotated_qubit_basis(double theta);

/// Eigenbases of sigma_z, sigma_x, sigma_y.
std::vector<RankOnePovm> qubit_pauli_mubs();

/// d+1 pairwise unbiased bases for prime d (supported: 2, 3, 5):
/// eigenbases of Z, X and XZ^m for m = 1..d-1.
std::vector<RankOnePovm> prime_pauli_mubs(std::size_t d);

/// Symmetric informationally complete POVM, d in {2, 3}: d^2 vectors
/// |f_i> = |phi_i>/sqrt(d) with |<phi_i|phi_j>|^2 = 1/(d+1) off-diagonal.
RankOnePovm sic_povm(std::size_t d);

/// MUMs via depolarized projectors N_i = t|e_i><e_i| + (1-t) I/d, t in (0,1];
/// the resulting efficiency is kappa = t^2 + (1-t^2)/d.
MumSet mum_from_mubs(const std::vector<RankOnePovm>& bases, double t);

/// General SIC via N_i = t|f_i><f_i| + (1-t) I/d^2, t in (0,1].
GeneralSic gsic_from_sic(const RankOnePovm& sic, double t);

}  // namespace entrosep
