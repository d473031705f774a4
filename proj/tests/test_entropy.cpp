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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "entrosep/entropy.hpp"
#include "oracles.hpp"

using namespace entrosep;

TEST_CASE("entropic orders must be positive") {
  CHECK_THROWS_AS(EntropyOrder(0.0), UsageError);
  CHECK_THROWS_AS(EntropyOrder(-1.0), UsageError);
  CHECK(EntropyOrder::infinity().is_infinite());
  CHECK(EntropyOrder(1.0 + 1e-9).near_one());
  CHECK_FALSE(EntropyOrder(1.1).near_one());
}

TEST_CASE("probability vectors clamp eigensolver noise and renormalize") {
  const ProbabilityVector p({0.5, 0.5 + 4e-10, -4e-10});
  CHECK(p[2] == 0.0);
  CHECK(p[0] + p[1] + p[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(ProbabilityVector({0.9, 0.1 - 1e-7}), InputError);
  CHECK_THROWS_AS(ProbabilityVector({0.6, 0.5}), InputError);
  CHECK_THROWS_AS(ProbabilityVector({1.0, -1e-6}), InputError);
}

TEST_CASE("convolution basics") {
  SUBCASE("delta is the unit element") {
    for (double a : {0.0, 0.3, 1.0}) {
      const auto out = convolve(std::vector<double>{1.0, 0.0}, std::vector<double>{a, 1.0 - a});
      CHECK(out[0] == doctest::Approx(a));
      CHECK(out[1] == doctest::Approx(1.0 - a));
    }
  }
  SUBCASE("uniform absorbs anything") {
    std::mt19937_64 rng(3);
    const auto q = oracles::random_probability(5, rng);
    const std::vector<double> uniform(5, 0.2);
    const auto out = convolve(uniform, q);
    for (double x : out) CHECK(x == doctest::Approx(0.2).epsilon(1e-12));
  }
  SUBCASE("hand-evaluated pair") {
    const auto out = convolve(std::vector<double>{0.7, 0.3}, std::vector<double>{0.6, 0.4});
    CHECK(out[0] == doctest::Approx(0.54));
    CHECK(out[1] == doctest::Approx(0.46));
  }
  SUBCASE("length mismatch is a usage error") {
    CHECK_THROWS_AS((void)convolve(std::vector<double>{1.0}, std::vector<double>{0.5, 0.5}),
                    UsageError);
  }
}

TEST_CASE("norm-like functionals") {
  const std::vector<double> uniform4(4, 0.25);
  CHECK(norm_alpha(uniform4, EntropyOrder(2.0)) == doctest::Approx(0.5));
  CHECK(norm_alpha(uniform4, EntropyOrder(1.0)) == doctest::Approx(1.0));

  std::mt19937_64 rng(5);
  const auto p = oracles::random_probability(6, rng);
  CHECK(norm_alpha(p, EntropyOrder(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(norm_alpha(p, EntropyOrder::infinity()) ==
        doctest::Approx(*std::max_element(p.begin(), p.end())));

  // ((1+c)/2, (1-c)/2) at alpha = 1/2 evaluates to 1 + sqrt(1-c^2).
  const double c = 1.0 / std::sqrt(2.0);
  const std::vector<double> biased{(1.0 + c) / 2.0, (1.0 - c) / 2.0};
  CHECK(norm_alpha(biased, EntropyOrder(0.5)) ==
        doctest::Approx(1.0 + std::sqrt(1.0 - c * c)).epsilon(1e-12));
  CHECK(norm_alpha(biased, EntropyOrder(0.5)) == doctest::Approx(1.7071068).epsilon(1e-7));
}

TEST_CASE("Renyi entropy endpoints") {
  const std::vector<double> uniform5(5, 0.2);
  for (double a : {0.5, 1.0, 2.0, 7.0}) {
    CHECK(renyi(uniform5, EntropyOrder(a)) == doctest::Approx(std::log(5.0)).epsilon(1e-12));
  }
  CHECK(renyi(uniform5, EntropyOrder::infinity()) == doctest::Approx(std::log(5.0)));

  const std::vector<double> point{1.0, 0.0, 0.0};
  for (double a : {0.5, 1.0, 3.0}) {
    CHECK(renyi(point, EntropyOrder(a)) == doctest::Approx(0.0));
  }

  const double c = 1.0 / std::sqrt(2.0);
  const std::vector<double> biased{(1.0 + c) / 2.0, (1.0 - c) / 2.0};
  CHECK(renyi(biased, EntropyOrder::infinity()) ==
        doctest::Approx(-std::log((1.0 + c) / 2.0)).epsilon(1e-13));
}

TEST_CASE("Tsallis entropy endpoints") {
  const std::vector<double> uniform3(3, 1.0 / 3.0);
  CHECK(tsallis(uniform3, EntropyOrder(2.0)) == doctest::Approx(1.0 - 1.0 / 3.0));
  CHECK(tsallis(std::vector<double>{1.0, 0.0}, EntropyOrder(3.0)) == doctest::Approx(0.0));

  const double c = 1.0 / std::sqrt(3.0);
  const std::vector<double> biased{(1.0 + c) / 2.0, (1.0 - c) / 2.0};
  CHECK(tsallis(biased, EntropyOrder(2.0)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS((void)tsallis(uniform3, EntropyOrder::infinity()), UsageError);
}

TEST_CASE("alpha-logarithm") {
  for (double a : {0.3, 1.0, 2.0, 5.0}) {
    CHECK(alpha_log(1.0, EntropyOrder(a)) == doctest::Approx(0.0));
  }
  CHECK(alpha_log(std::exp(1.0), EntropyOrder(1.0)) == doctest::Approx(1.0));
  CHECK(alpha_log(1.5, EntropyOrder(2.0)) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS((void)alpha_log(0.0, EntropyOrder(2.0)), UsageError);
  CHECK_THROWS_AS((void)alpha_log(-1.0, EntropyOrder(2.0)), UsageError);
}

TEST_CASE("majorization comparisons") {
  CHECK(is_majorized_by(std::vector<double>{0.5, 0.5}, std::vector<double>{1.0, 0.0}));
  CHECK(is_majorized_by(std::vector<double>{0.54, 0.46}, std::vector<double>{0.7, 0.3}));
  CHECK_FALSE(is_majorized_by(std::vector<double>{0.7, 0.3}, std::vector<double>{0.6, 0.4}));
  CHECK(is_majorized_by(std::vector<double>{0.5, 0.5}, std::vector<double>{0.5, 0.5}));
  // zero padding
  CHECK(is_majorized_by(std::vector<double>{0.4, 0.3, 0.3}, std::vector<double>{1.0}));
  CHECK_THROWS_AS(
      (void)is_majorized_by(std::vector<double>{0.5, 0.5}, std::vector<double>{0.7, 0.4}),
      UsageError);
}

TEST_CASE("convolution contracts norm-like functionals") {
  // ||g*h||_alpha <= ||g||_alpha for alpha > 1 and >= for beta < 1 whenever
  // h is normalized; g only needs to be positive.
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> mag(0.01, 3.0);
  std::uniform_int_distribution<std::size_t> length(2, 9);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = length(rng);
    std::vector<double> g(n);
    for (double& x : g) x = mag(rng);
    const std::vector<double> h = oracles::random_probability(n, rng);
    const std::vector<double> gh = convolve(g, h);
    for (double a : {1.5, 2.0, 3.0}) {
      CHECK(norm_alpha(gh, EntropyOrder(a)) <= norm_alpha(g, EntropyOrder(a)) + 1e-10);
    }
    for (double b : {0.3, 0.5, 0.9}) {
      CHECK(norm_alpha(gh, EntropyOrder(b)) >= norm_alpha(g, EntropyOrder(b)) - 1e-10);
    }
  }
}

TEST_CASE("convolution of probability vectors is majorized by both factors") {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<std::size_t> length(2, 8);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = length(rng);
    const auto p = oracles::random_probability(n, rng);
    const auto q = oracles::random_probability(n, rng);
    const auto pq = convolve(p, q);
    CHECK(is_majorized_by(pq, p));
    CHECK(is_majorized_by(pq, q));
  }
}

TEST_CASE("the cyclic-shift matrix of the convolution is doubly stochastic") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = oracles::random_probability(6, rng);
    // Row i of T reads q_{i - j mod D}; p*q = T p.
    for (std::size_t i = 0; i < 6; ++i) {
      double row_sum = 0.0;
      double col_sum = 0.0;
      for (std::size_t j = 0; j < 6; ++j) {
        row_sum += q[(i + 6 - j) % 6];
        col_sum += q[(j + 6 - i) % 6];
      }
      CHECK(row_sum == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(col_sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    const auto p = oracles::random_probability(6, rng);
    const auto pq = convolve(p, q);
    for (std::size_t k = 0; k < 6; ++k) {
      double tp = 0.0;
      for (std::size_t j = 0; j < 6; ++j) tp += q[(k + 6 - j) % 6] * p[j];
      CHECK(pq[k] == doctest::Approx(tp).epsilon(1e-12));
    }
  }
}

TEST_CASE("Renyi entropy is non-increasing in alpha") {
  std::mt19937_64 rng(109);
  const double orders[] = {0.2, 0.5, 0.9, 1.0, 1.3, 2.0, 4.0, 10.0};
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracles::random_probability(5, rng);
    double previous = renyi(p, EntropyOrder(orders[0]));
    for (std::size_t i = 1; i < std::size(orders); ++i) {
      const double current = renyi(p, EntropyOrder(orders[i]));
      CHECK(current <= previous + 1e-10);
      previous = current;
    }
    CHECK(renyi(p, EntropyOrder::infinity()) <= previous + 1e-10);
  }
}

TEST_CASE("Renyi and Tsallis entropies are Schur-concave") {
  std::mt19937_64 rng(113);
  std::uniform_int_distribution<std::size_t> pick(0, 5);
  std::uniform_real_distribution<double> mix(0.0, 0.5);
  for (int trial = 0; trial < 300; ++trial) {
    auto b = oracles::random_probability(6, rng);
    // Robin Hood transfers produce a ≺ b.
    auto a = b;
    for (int step = 0; step < 4; ++step) {
      std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      if (a[i] < a[j]) std::swap(i, j);
      const double shift = mix(rng) * (a[i] - a[j]) / 2.0;
      a[i] -= shift;
      a[j] += shift;
    }
    REQUIRE(is_majorized_by(a, b));
    for (double order : {0.5, 1.0, 2.0}) {
      CHECK(renyi(a, EntropyOrder(order)) >= renyi(b, EntropyOrder(order)) - 1e-10);
      CHECK(tsallis(a, EntropyOrder(order)) >= tsallis(b, EntropyOrder(order)) - 1e-10);
    }
  }
}

TEST_CASE("Renyi entropy is continuous through the Shannon point") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = oracles::random_probability(7, rng);
    const double h = shannon(p);
    CHECK(std::abs(renyi(p, EntropyOrder(1.0 + 1e-8)) - h) < 1e-6);
    CHECK(std::abs(renyi(p, EntropyOrder(1.0 - 1e-8)) - h) < 1e-6);
    CHECK(std::abs(tsallis(p, EntropyOrder(1.0 + 1e-8)) - h) < 1e-6);
  }
}
