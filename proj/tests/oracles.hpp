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
//
// Independent test oracles. These deliberately avoid the library code paths
// they are used to check.

#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "entrosep/linalg.hpp"

namespace entrosep::oracles {

/// Largest singular value by power iteration on M^dagger M, run to
/// stagnation. Independent of the SVD backend used by spectral_norm.
inline double power_iteration_norm(const Matrix& m, std::size_t max_iterations = 20000) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  std::mt19937_64 rng(987654321);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(m.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  double sigma = 0.0;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    Vector mv = m * v;
    const double next_sigma = mv.norm();
    if (next_sigma == 0.0) return 0.0;
    Vector next = m.adjoint() * mv;
    const double norm = next.norm();
    if (norm == 0.0) return next_sigma;
    v = next / norm;
    if (it > 32 && std::abs(next_sigma - sigma) < 1e-14 * std::max(1.0, next_sigma)) {
      return next_sigma;
    }
    sigma = next_sigma;
  }
  return sigma;
}

/// Largest singular value via the Hermitian eigenproblem of M^dagger M;
/// a second route independent of the two-sided Jacobi SVD.
inline double hermitian_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const Matrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

/// Exhaustive s_k sequence via recursive subset enumeration; written
/// independently of majorization::s_values.
inline std::vector<double> brute_force_s_values(const Matrix& v) {
  const std::size_t n = static_cast<std::size_t>(v.rows());
  std::vector<double> s(2 * n - 1, 0.0);

  std::vector<std::size_t> rows, cols;
  std::function<void(std::size_t)> pick_cols = [&](std::size_t from) {
    if (!cols.empty()) {
      Matrix sub(rows.size(), cols.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = v(rows[i], cols[j]);
      }
      const std::size_t k = rows.size() + cols.size() - 1;
      s[k - 1] = std::max(s[k - 1], hermitian_norm(sub));
    }
    for (std::size_t c = from; c < n; ++c) {
      cols.push_back(c);
      pick_cols(c + 1);
      cols.pop_back();
    }
  };
  std::function<void(std::size_t)> pick_rows = [&](std::size_t from) {
    if (!rows.empty()) pick_cols(0);
    for (std::size_t r = from; r < n; ++r) {
      rows.push_back(r);
      pick_rows(r + 1);
      rows.pop_back();
    }
  };
  pick_rows(0);
  for (std::size_t k = 1; k < s.size(); ++k) s[k] = std::max(s[k], s[k - 1]);
  return s;
}

/// Partial transpose on subsystem B of a (da x db) bipartite matrix.
inline Matrix partial_transpose(const Matrix& m, std::size_t da, std::size_t db) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t s = 0; s < db; ++s) {
        for (std::size_t t = 0; t < db; ++t) {
          out(i * db + t, j * db + s) = m(i * db + s, j * db + t);
        }
      }
    }
  }
  return out;
}

/// Ground-truth entanglement witness for 2x2 and 2x3 systems.
inline double ppt_min_eigenvalue(const Matrix& m, std::size_t da, std::size_t db) {
  const Matrix pt = partial_transpose(m, da, db);
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (pt + pt.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Plain bisection on a violation predicate over [0, 1]; independent of
/// scan_threshold's pre-scan machinery.
inline std::optional<double> bisect_threshold(const std::function<bool(double)>& violated,
                                              double width = 1e-9) {
  if (!violated(1.0)) return std::nullopt;
  double lo = 0.0;
  double hi = 1.0;
  if (violated(lo)) return 0.0;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    (violated(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Random probability vector from normalized exponentials.
inline std::vector<double> random_probability(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (double& x : p) {
    x = expo(rng);
    total += x;
  }
  for (double& x : p) x /= total;
  return p;
}

}  // namespace entrosep::oracles
