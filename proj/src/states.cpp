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

#include "entrosep/states.hpp"

#include <cmath>

#include "entrosep/measurements.hpp"

namespace entrosep {

Vector max_entangled_phi() {
  Vector phi = Vector::Zero(4);
  phi(0) = 1.0 / std::sqrt(2.0);
  phi(3) = 1.0 / std::sqrt(2.0);
  return phi;
}

Vector qutrit_psi() {
  // Pairs (z_j, x_{pi(j)}) with pi = (0, 2, 1); the labeling of the X
  // eigenbasis (X|x_k> = omega^k |x_k>) makes Psi a simultaneous eigenstate
  // of Z(x)X, X(x)Z and ZX(x)ZX.
  const RankOnePovm x_basis = pauli_x_basis(3);
  Vector psi = Vector::Zero(9);
  const std::size_t pairing[3] = {0, 2, 1};
  for (std::size_t j = 0; j < 3; ++j) {
    const Vector& xk = x_basis.vector(pairing[j]);
    for (std::size_t l = 0; l < 3; ++l) {
      psi(j * 3 + l) += xk(l) / std::sqrt(3.0);
    }
  }
  return psi;
}

namespace {

DensityMatrix isotropic_mix(const Vector& psi, std::size_t d, double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw UsageError("state family: parameter c must lie in [0, 1]");
  }
  const std::size_t dim = d * d;
  Matrix rho = (1.0 - c) / static_cast<double>(dim) * Matrix::Identity(dim, dim) +
               c * (psi * psi.adjoint());
  return DensityMatrix::make_bipartite(std::move(rho), d, d);
}

}  // namespace

DensityMatrix werner_qubit(double c) { return isotropic_mix(max_entangled_phi(), 2, c); }

DensityMatrix qutrit_family(double c) { return isotropic_mix(qutrit_psi(), 3, c); }

DensityMatrix pure_bipartite(const Vector& psi, std::size_t dim_a, std::size_t dim_b) {
  if (static_cast<std::size_t>(psi.size()) != dim_a * dim_b) {
    throw UsageError("pure_bipartite: vector length must equal dim_a * dim_b");
  }
  Matrix rho = psi * psi.adjoint();
  return DensityMatrix::make_bipartite(std::move(rho), dim_a, dim_b);
}

DensityMatrix product_mixture(const std::vector<ProductComponent>& components) {
  if (components.empty()) throw UsageError("product_mixture: no components");
  const std::size_t da = components.front().rho_a.dim();
  const std::size_t db = components.front().rho_b.dim();
  double weight_sum = 0.0;
  for (const auto& comp : components) {
    if (comp.weight < 0.0) throw UsageError("product_mixture: negative weight");
    if (comp.rho_a.dim() != da || comp.rho_b.dim() != db) {
      throw UsageError("product_mixture: mismatched component dimensions");
    }
    weight_sum += comp.weight;
  }
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    throw UsageError("product_mixture: weights must sum to 1");
  }
  Matrix rho = Matrix::Zero(da * db, da * db);
  for (const auto& comp : components) {
    rho += comp.weight * kron(comp.rho_a.matrix(), comp.rho_b.matrix());
  }
  return DensityMatrix::make_bipartite(std::move(rho), da, db);
}

StateFamily werner_qubit_family() {
  return StateFamily{"werner-qubit", {2, 2}, "c",
                     [](double c) { return werner_qubit(c); }, 1.0 / 3.0};
}

StateFamily qutrit_werner_family() {
  return StateFamily{"qutrit-werner", {3, 3}, "c",
                     [](double c) { return qutrit_family(c); }, 1.0 / 4.0};
}

const std::vector<StateFamily>& state_families() {
  static const std::vector<StateFamily> families = {werner_qubit_family(),
                                                    qutrit_werner_family()};
  return families;
}

const StateFamily& find_family(const std::string& name) {
  for (const StateFamily& f : state_families()) {
    if (f.name == name) return f;
  }
  throw UsageError("unknown state family: " + name);
}

Vector random_pure_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

Matrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < dim; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    q.col(j) *= (mag > 0.0) ? diag / mag : Complex(1.0, 0.0);
  }
  return q;
}

DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(1, 2 * dim);
  std::exponential_distribution<double> expo(1.0);
  const std::size_t terms = count(rng);
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) {
    w = expo(rng);
    total += w;
  }
  Matrix rho = Matrix::Zero(dim, dim);
  for (std::size_t t = 0; t < terms; ++t) {
    const Vector psi = random_pure_state(dim, rng);
    rho += weights[t] / total * (psi * psi.adjoint());
  }
  return DensityMatrix::make(std::move(rho));
}

DensityMatrix random_separable(std::size_t dim_a, std::size_t dim_b, std::mt19937_64& rng,
                               std::size_t max_components) {
  if (max_components == 0) throw UsageError("random_separable: need at least one component");
  std::uniform_int_distribution<std::size_t> count(1, max_components);
  std::exponential_distribution<double> expo(1.0);
  const std::size_t terms = count(rng);
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) {
    w = expo(rng);
    total += w;
  }
  Matrix rho = Matrix::Zero(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t t = 0; t < terms; ++t) {
    const Vector a = random_pure_state(dim_a, rng);
    const Vector b = random_pure_state(dim_b, rng);
    rho += weights[t] / total * kron(a * a.adjoint(), b * b.adjoint());
  }
  return DensityMatrix::make_bipartite(std::move(rho), dim_a, dim_b);
}

}  // namespace entrosep
