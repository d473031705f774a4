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

#include "entrosep/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entrosep {

namespace {

constexpr double kTieTol = 1e-10;
constexpr double kUnitTol = 1e-9;

std::vector<std::size_t> mask_indices(unsigned mask) {
  std::vector<std::size_t> idx;
  for (std::size_t bit = 0; mask != 0; ++bit, mask >>= 1) {
    if (mask & 1u) idx.push_back(bit);
  }
  return idx;
}

}  // namespace

SValueProfile s_values(const Matrix& v) {
  if (v.rows() != v.cols() || v.rows() == 0) {
    throw UsageError("s_values: matrix must be square and nonempty");
  }
  const std::size_t n = static_cast<std::size_t>(v.rows());
  if (n > kMaxSValueDim) {
    std::ostringstream msg;
    msg << "s_values: D = " << n << " exceeds the enumeration cap " << kMaxSValueDim;
    throw UsageError(msg.str());
  }
  if (spectral_norm(v) > 1.0 + kUnitTol) {
    throw UsageError("s_values: spectral norm exceeds 1; not a valid overlap matrix");
  }

  SValueProfile profile;
  profile.s.assign(2 * n - 1, 0.0);
  const unsigned full = (1u << n) - 1u;
  for (unsigned rows = 1; rows <= full; ++rows) {
    const auto ridx = mask_indices(rows);
    for (unsigned cols = 1; cols <= full; ++cols) {
      const auto cidx = mask_indices(cols);
      Matrix sub(ridx.size(), cidx.size());
      for (std::size_t i = 0; i < ridx.size(); ++i) {
        for (std::size_t j = 0; j < cidx.size(); ++j) {
          sub(i, j) = v(ridx[i], cidx[j]);
        }
      }
      const std::size_t k = ridx.size() + cidx.size() - 1;  // class index, 1-based
      profile.s[k - 1] = std::max(profile.s[k - 1], spectral_norm(sub));
    }
  }

  // Nesting makes s non-decreasing; merge float-noise ties and clamp at 1.
  for (std::size_t k = 0; k < profile.s.size(); ++k) {
    if (k > 0 && profile.s[k] < profile.s[k - 1]) {
      if (profile.s[k - 1] - profile.s[k] > kTieTol) {
        throw NumericError("s_values: non-monotone s sequence beyond tie tolerance");
      }
      profile.s[k] = profile.s[k - 1];
    }
    profile.s[k] = std::min(profile.s[k], 1.0);
  }

  profile.d_star = 0;
  for (std::size_t k = 0; k < profile.s.size(); ++k) {
    if (profile.s[k] >= 1.0 - kUnitTol) {
      profile.s[k] = 1.0;
      if (profile.d_star == 0) profile.d_star = k + 1;
    }
  }
  if (profile.d_star == 0) {
    throw UsageError("s_values: s never reaches 1; not an overlap matrix of rank-one POVMs");
  }
  profile.degenerate = (profile.d_star == 1);
  profile.w = majorizing_w(profile.s, profile.d_star);
  profile.w_prime = majorizing_w_prime(profile.s, profile.d_star);
  return profile;
}

std::vector<double> majorizing_w(std::span<const double> s, std::size_t d_star) {
  if (d_star == 0 || d_star > s.size()) throw UsageError("majorizing_w: bad d_star");
  std::vector<double> w(d_star);
  w[0] = s[0];
  for (std::size_t k = 1; k < d_star; ++k) w[k] = std::max(0.0, s[k] - s[k - 1]);
  return w;
}

std::vector<double> majorizing_w_prime(std::span<const double> s, std::size_t d_star) {
  if (d_star == 0 || d_star > s.size()) throw UsageError("majorizing_w_prime: bad d_star");
  auto t = [&s](std::size_t k) {
    const double u = 1.0 + s[k];
    return u * u / 4.0;
  };
  std::vector<double> w(d_star);
  w[0] = t(0);
  for (std::size_t k = 1; k < d_star; ++k) w[k] = std::max(0.0, t(k) - t(k - 1));
  return w;
}

SubsetBound subset_bound(const RankOnePovm& f, const RankOnePovm& g,
                         std::span<const std::size_t> i_set,
                         std::span<const std::size_t> j_set, const DensityMatrix& rho) {
  if (f.dim() != g.dim() || f.dim() != rho.dim()) {
    throw UsageError("subset_bound: dimension mismatch");
  }
  for (std::size_t i : i_set) {
    if (i >= f.outcome_count()) throw UsageError("subset_bound: index out of range in I");
  }
  for (std::size_t j : j_set) {
    if (j >= g.outcome_count()) throw UsageError("subset_bound: index out of range in J");
  }

  SubsetBound result;
  const ProbabilityVector pf = probabilities(f, rho);
  const ProbabilityVector pg = probabilities(g, rho);
  for (std::size_t i : i_set) result.lhs += pf[i];
  for (std::size_t j : j_set) result.lhs += pg[j];

  Matrix ci(i_set.size(), f.dim());
  for (std::size_t r = 0; r < i_set.size(); ++r) ci.row(r) = f.vector(i_set[r]).adjoint();
  Matrix cj(j_set.size(), g.dim());
  for (std::size_t r = 0; r < j_set.size(); ++r) cj.row(r) = g.vector(j_set[r]).adjoint();
  result.rhs = 1.0 + spectral_norm(ci * cj.adjoint());
  result.satisfied = result.lhs <= result.rhs + 1e-9;
  return result;
}

}  // namespace entrosep
