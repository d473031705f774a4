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

#include "entrosep/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace entrosep {

std::size_t kron_dim_cap() {
  if (const char* env = std::getenv("ENTROSEP_MAX_DIM")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return 4096;
}

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!all_finite(a) || !all_finite(b)) {
    throw UsageError("kron: operands must be finite");
  }
  const std::size_t cap = kron_dim_cap();
  const std::size_t rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
  const std::size_t cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
  if (rows > cap || cols > cap) {
    std::ostringstream msg;
    msg << "kron: result " << rows << "x" << cols << " exceeds dimension cap " << cap;
    throw UsageError(msg.str());
  }
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (!all_finite(m)) throw UsageError("spectral_norm: matrix must be finite");
  Eigen::JacobiSVD<Matrix> svd(m);
  const double value = svd.singularValues()(0);
  if (!std::isfinite(value)) throw NumericError("spectral_norm: SVD did not converge");
  return value;
}

std::string DensityCheck::summary() const {
  if (ok) return "valid density matrix";
  std::ostringstream msg;
  msg << "density matrix invariant violations:";
  for (const auto& v : violations) {
    msg << " " << v.invariant << " (by " << v.magnitude << ")";
  }
  return msg.str();
}

DensityCheck check_density(const Matrix& m, const Tolerances& tol) {
  DensityCheck check;
  auto fail = [&check](std::string name, double magnitude) {
    check.ok = false;
    check.violations.push_back({std::move(name), magnitude});
  };

  if (m.rows() != m.cols()) {
    fail("square", static_cast<double>(std::abs(m.rows() - m.cols())));
    return check;
  }
  if (!all_finite(m)) {
    fail("finite", std::numeric_limits<double>::infinity());
    return check;
  }

  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol.hermitian) fail("hermitian", herm_dev);

  const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol.trace) fail("trace", trace_dev);

  // Eigenvalues of the Hermitian part; skew noise is already reported above.
  Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    fail("psd", std::numeric_limits<double>::infinity());
    return check;
  }
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol.psd) fail("psd", -min_eig);

  return check;
}

DensityMatrix DensityMatrix::make(Matrix m, const Tolerances& tol) {
  DensityCheck check = check_density(m, tol);
  if (!check.ok) throw InputError(check.summary());
  return DensityMatrix(std::move(m), std::nullopt);
}

DensityMatrix DensityMatrix::make_bipartite(Matrix m, std::size_t dim_a, std::size_t dim_b,
                                            const Tolerances& tol) {
  if (dim_a == 0 || dim_b == 0 ||
      static_cast<std::size_t>(m.rows()) != dim_a * dim_b) {
    throw UsageError("make_bipartite: matrix dimension must equal dim_a * dim_b");
  }
  DensityCheck check = check_density(m, tol);
  if (!check.ok) throw InputError(check.summary());
  return DensityMatrix(std::move(m), std::make_pair(dim_a, dim_b));
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (!rho.subsystem_dims()) {
    throw UsageError("partial_trace: state has no declared subsystem dims");
  }
  const auto [da, db] = *rho.subsystem_dims();
  const Matrix& m = rho.matrix();
  const std::size_t dk = (keep == Subsystem::A) ? da : db;
  Matrix out = Matrix::Zero(dk, dk);
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = 0; j < dk; ++j) {
      Complex sum = 0.0;
      if (keep == Subsystem::A) {
        for (std::size_t t = 0; t < db; ++t) sum += m(i * db + t, j * db + t);
      } else {
        for (std::size_t t = 0; t < da; ++t) sum += m(t * db + i, t * db + j);
      }
      out(i, j) = sum;
    }
  }
  // Partial trace preserves Hermiticity and trace; re-validate to be sure.
  return DensityMatrix::make(std::move(out));
}

}  // namespace entrosep
