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

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "entrosep/errors.hpp"

namespace entrosep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerances for density-matrix validation. All test matrices are tiny
/// (<= 81x81), so double precision leaves plenty of headroom at 1e-9.
struct Tolerances {
  double hermitian = 1e-9;
  double trace = 1e-9;
  double psd = 1e-9;
};

/// Maximum row/column count a kron() result may have. Defaults to 4096;
/// the ENTROSEP_MAX_DIM environment variable overrides it.
std::size_t kron_dim_cap();

bool all_finite(const Matrix& m);

/// Kronecker product a (x) b, with block structure a_ij * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Largest singular value (Schatten-infinity norm). Zero for empty matrices.
double spectral_norm(const Matrix& m);

/// Hermitian part deviation, trace deviation, most negative eigenvalue —
/// one entry per violated invariant.
struct DensityViolation {
  std::string invariant;  // "finite" | "square" | "hermitian" | "trace" | "psd"
  double magnitude;
};

struct DensityCheck {
  bool ok = true;
  std::vector<DensityViolation> violations;
  std::string summary() const;
};

DensityCheck check_density(const Matrix& m, const Tolerances& tol = {});

enum class Subsystem { A, B };

/// A checked quantum state: Hermitian, unit trace, positive semidefinite
/// within tolerances. Optionally carries a bipartite split (d_A, d_B).
class DensityMatrix {
 public:
  /// Validates and wraps `m`; throws InputError with the violation report.
  static DensityMatrix make(Matrix m, const Tolerances& tol = {});
  static DensityMatrix make_bipartite(Matrix m, std::size_t dim_a, std::size_t dim_b,
                                      const Tolerances& tol = {});

  const Matrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const std::optional<std::pair<std::size_t, std::size_t>>& subsystem_dims() const {
    return subsystem_dims_;
  }

  double purity() const { return (matrix_ * matrix_).trace().real(); }

 private:
  DensityMatrix(Matrix m, std::optional<std::pair<std::size_t, std::size_t>> dims)
      : matrix_(std::move(m)), subsystem_dims_(std::move(dims)) {}

  Matrix matrix_;
  std::optional<std::pair<std::size_t, std::size_t>> subsystem_dims_;
};

/// Trace out the complementary subsystem; requires declared subsystem dims.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

}  // namespace entrosep
