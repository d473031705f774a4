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

#include "entrosep/errors.hpp"

namespace entrosep {

/// Entropic order alpha > 0, with a distinguished infinite value for
/// min-entropy / max-norm limits. Orders within 1e-7 of 1 are routed to the
/// Shannon formulas to avoid catastrophic cancellation in 1/(1-alpha).
class EntropyOrder {
 public:
  explicit EntropyOrder(double alpha);
  static EntropyOrder infinity();

  double value() const { return alpha_; }
  bool is_infinite() const;
  bool near_one() const;

 private:
  double alpha_;
};

/// Nonnegative, normalized outcome distribution. Entries in [-1e-9, 0) are
/// clamped to zero (eigendecomposition noise) and the vector is renormalized;
/// anything more negative, or a total off 1 by more than 1e-9, is rejected.
class ProbabilityVector {
 public:
  static constexpr double kTolerance = 1e-9;

  explicit ProbabilityVector(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& values() const { return probs_; }
  operator std::span<const double>() const { return probs_; }

 private:
  std::vector<double> probs_;
};

/// Cyclic convolution (g*h)_k = sum_i g_i h_{k-i mod D}.
std::vector<double> convolve(std::span<const double> g, std::span<const double> h);
ProbabilityVector convolve(const ProbabilityVector& g, const ProbabilityVector& h);

/// Norm-like functional (sum_i p_i^alpha)^(1/alpha); max entry at infinite order.
double norm_alpha(std::span<const double> p, EntropyOrder alpha);

/// Renyi alpha-entropy; Shannon at alpha = 1, min-entropy -ln(max p) at infinity.
double renyi(std::span<const double> p, EntropyOrder alpha);

/// Tsallis alpha-entropy; Shannon at alpha = 1. Infinite order unsupported.
double tsallis(std::span<const double> p, EntropyOrder alpha);

double shannon(std::span<const double> p);

/// alpha-logarithm (xi^(1-alpha) - 1)/(1-alpha); natural log at alpha = 1.
double alpha_log(double xi, EntropyOrder alpha);

/// Checks a ≺ b: every descending partial sum of a bounded by the matching
/// one of b (tolerance 1e-9, ties pass), equal totals. Shorter input is
/// zero-padded. Total mismatch beyond tolerance is a usage error.
bool is_majorized_by(std::span<const double> a, std::span<const double> b);

}  // namespace entrosep
