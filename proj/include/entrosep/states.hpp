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

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "entrosep/linalg.hpp"

namespace entrosep {

/// (|z0 z0> + |z1 z1>)/sqrt(2) as a normalized 4-vector.
Vector max_entangled_phi();

/// (|z0 x0> + |z1 x2> + |z2 x1>)/sqrt(3) in the computational product basis.
Vector qutrit_psi();

/// (1-c)/4 I + c |Phi><Phi|; separable iff c <= 1/3.
DensityMatrix werner_qubit(double c);

/// (1-c)/9 I + c |Psi><Psi| on two qutrits.
DensityMatrix qutrit_family(double c);

DensityMatrix pure_bipartite(const Vector& psi, std::size_t dim_a, std::size_t dim_b);

struct ProductComponent {
  double weight;
  DensityMatrix rho_a;
  DensityMatrix rho_b;
};

/// Convex mixture sum_l w_l rho_A(l) (x) rho_B(l). Weights must be
/// nonnegative and sum to 1 within 1e-9.
DensityMatrix product_mixture(const std::vector<ProductComponent>& components);

/// Parametric family c in [0,1] -> density matrix, used for threshold scans.
struct StateFamily {
  std::string name;
  std::pair<std::size_t, std::size_t> dims;
  std::string parameter_name;
  std::function<DensityMatrix(double)> generator;
  std::optional<double> separability_limit;
};

StateFamily werner_qubit_family();
StateFamily qutrit_werner_family();
const std::vector<StateFamily>& state_families();
const StateFamily& find_family(const std::string& name);

/// Haar-random unit vector.
Vector random_pure_state(std::size_t dim, std::mt19937_64& rng);

/// Haar-random unitary (QR of a Ginibre matrix, phases fixed).
Matrix random_unitary(std::size_t dim, std::mt19937_64& rng);

/// Random full-rank-ish density matrix (mixture of Haar-random pure states).
DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng);

/// Random separable state: Dirichlet-weighted mixture of at most
/// `max_components` pure product states with Haar-random local vectors.
DensityMatrix random_separable(std::size_t dim_a, std::size_t dim_b, std::mt19937_64& rng,
                               std::size_t max_components = 16);

}  // namespace entrosep
