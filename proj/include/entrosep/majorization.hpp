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
#include <span>
#include <vector>

#include "entrosep/linalg.hpp"
#include "entrosep/measurements.hpp"

namespace entrosep {

/// Combinatorial enumeration cost grows binomially; the shipped measurement
/// constructions need D <= 4, so the cap is generous.
inline constexpr std::size_t kMaxSValueDim = 6;

/// Maximal-submatrix spectral norms s_1 <= ... <= s_{2D-1} = 1 of an overlap
/// matrix, with the derived majorizing vectors. d_star is the first (1-based)
/// index where s reaches 1; w and w_prime carry differences up to d_star.
/// degenerate marks the identical-bases case d_star = 1.
struct SValueProfile {
  std::vector<double> s;
  std::size_t d_star = 0;
  std::vector<double> w;
  std::vector<double> w_prime;
  bool degenerate = false;
};

/// s_k = max spectral norm over all r x r' submatrices with r + r' = k + 1,
/// enumerated exhaustively. Requires spectral_norm(v) <= 1 + 1e-9 and
/// D <= kMaxSValueDim.
SValueProfile s_values(const Matrix& v);

/// w = (s_1, s_2 - s_1, ..., s_{d_star} - s_{d_star - 1}).
std::vector<double> majorizing_w(std::span<const double> s, std::size_t d_star);

/// Differences of t_k = (1 + s_k)^2 / 4 up to d_star.
std::vector<double> majorizing_w_prime(std::span<const double> s, std::size_t d_star);

struct SubsetBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = true;
};

/// Probability mass of outcome subsets I (under f) and J (under g) against
/// the bound 1 + ||C_I C_J^dagger||, where C_I stacks the rows <f_i|.
SubsetBound subset_bound(const RankOnePovm& f, const RankOnePovm& g,
                         std::span<const std::size_t> i_set,
                         std::span<const std::size_t> j_set, const DensityMatrix& rho);

}  // namespace entrosep
