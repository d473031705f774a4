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

#include "entrosep/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace entrosep {

namespace {

constexpr double kShannonWindow = 1e-7;

// 0^alpha := 0 and 0 ln 0 := 0, by continuity.
double pow_term(double p, double alpha) { return p > 0.0 ? std::pow(p, alpha) : 0.0; }

}  // namespace

EntropyOrder::EntropyOrder(double alpha) : alpha_(alpha) {
  if (std::isnan(alpha) || alpha <= 0.0) {
    throw UsageError("EntropyOrder: alpha must be positive");
  }
}

EntropyOrder EntropyOrder::infinity() {
  return EntropyOrder(std::numeric_limits<double>::infinity());
}

bool EntropyOrder::is_infinite() const { return std::isinf(alpha_); }

bool EntropyOrder::near_one() const {
  return !is_infinite() && std::abs(alpha_ - 1.0) < kShannonWindow;
}

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw UsageError("ProbabilityVector: empty");
  double sum = 0.0;
  for (double& p : probs_) {
    if (!std::isfinite(p)) throw InputError("ProbabilityVector: non-finite entry");
    if (p < -kTolerance) {
      std::ostringstream msg;
      msg << "ProbabilityVector: negative entry " << p;
      throw InputError(msg.str());
    }
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > kTolerance) {
    std::ostringstream msg;
    msg << "ProbabilityVector: sum " << sum << " deviates from 1 beyond tolerance";
    throw InputError(msg.str());
  }
  for (double& p : probs_) p /= sum;
}

std::vector<double> convolve(std::span<const double> g, std::span<const double> h) {
  const std::size_t n = g.size();
  if (n == 0 || h.size() != n) {
    throw UsageError("convolve: inputs must have equal nonzero length");
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += g[i] * h[(k + n - i) % n];
    }
    out[k] = sum;
  }
  return out;
}

ProbabilityVector convolve(const ProbabilityVector& g, const ProbabilityVector& h) {
  return ProbabilityVector(convolve(std::span<const double>(g), std::span<const double>(h)));
}

double norm_alpha(std::span<const double> p, EntropyOrder alpha) {
  if (alpha.is_infinite()) {
    return *std::max_element(p.begin(), p.end());
  }
  const double a = alpha.value();
  double sum = 0.0;
  for (double x : p) sum += pow_term(x, a);
  return std::pow(sum, 1.0 / a);
}

double shannon(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

double renyi(std::span<const double> p, EntropyOrder alpha) {
  if (alpha.is_infinite()) {
    return -std::log(*std::max_element(p.begin(), p.end()));
  }
  if (alpha.near_one()) return shannon(p);
  const double a = alpha.value();
  double sum = 0.0;
  for (double x : p) sum += pow_term(x, a);
  return std::log(sum) / (1.0 - a);
}

double tsallis(std::span<const double> p, EntropyOrder alpha) {
  if (alpha.is_infinite()) {
    throw UsageError("tsallis: infinite order is not defined");
  }
  if (alpha.near_one()) return shannon(p);
  const double a = alpha.value();
  double sum = 0.0;
  for (double x : p) sum += pow_term(x, a);
  return (sum - 1.0) / (1.0 - a);
}

double alpha_log(double xi, EntropyOrder alpha) {
  if (!(xi > 0.0)) throw UsageError("alpha_log: argument must be positive");
  if (alpha.is_infinite()) throw UsageError("alpha_log: infinite order is not defined");
  if (alpha.near_one()) return std::log(xi);
  const double a = alpha.value();
  return (std::pow(xi, 1.0 - a) - 1.0) / (1.0 - a);
}

bool is_majorized_by(std::span<const double> a, std::span<const double> b) {
  constexpr double kTol = 1e-9;
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<double> av(a.begin(), a.end());
  std::vector<double> bv(b.begin(), b.end());
  av.resize(n, 0.0);
  bv.resize(n, 0.0);
  std::sort(av.begin(), av.end(), std::greater<double>());
  std::sort(bv.begin(), bv.end(), std::greater<double>());

  const double total_a = std::accumulate(av.begin(), av.end(), 0.0);
  const double total_b = std::accumulate(bv.begin(), bv.end(), 0.0);
  if (std::abs(total_a - total_b) > kTol) {
    std::ostringstream msg;
    msg << "is_majorized_by: totals differ (" << total_a << " vs " << total_b << ")";
    throw UsageError(msg.str());
  }

  double run_a = 0.0;
  double run_b = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    run_a += av[k];
    run_b += bv[k];
    if (run_a > run_b + kTol) return false;
  }
  return true;
}

}  // namespace entrosep
