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

#include "entrosep/setups.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

namespace entrosep {

namespace {

constexpr double kDefaultTheta = std::numbers::pi / 4.0;

std::size_t require_square(std::size_t dim_a, std::size_t dim_b) {
  if (dim_a != dim_b) {
    throw UsageError("criteria are formulated for subsystems of one common dimension");
  }
  return dim_a;
}

std::vector<std::size_t> identity_pairing(std::size_t d) {
  std::vector<std::size_t> p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = i;
  return p;
}

void append_param(std::vector<std::pair<std::string, double>>& params, const std::string& key,
                  double value) {
  params.emplace_back(key, value);
}

/// Wraps a criterion evaluator so every report carries the setup parameters
/// (notably theta, which the criteria themselves do not know about).
CriterionSetup finish(std::string id, std::vector<std::pair<std::string, double>> params,
                      std::function<CriterionReport(const DensityMatrix&)> eval) {
  CriterionSetup setup;
  setup.id = std::move(id);
  setup.params = std::move(params);
  auto params_copy = setup.params;
  setup.evaluate = [eval = std::move(eval), params_copy](const DensityMatrix& rho) {
    CriterionReport report = eval(rho);
    for (const auto& [key, value] : params_copy) {
      bool found = false;
      for (const auto& [rk, rv] : report.params) {
        if (rk == key) {
          found = true;
          break;
        }
      }
      if (!found) report.params.emplace_back(key, value);
    }
    return report;
  };
  return setup;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "mu-renyi",  "mu-tsallis",  "maj-renyi",   "maj-tsallis", "maj-qubit-a", "maj-qubit-b",
      "mub-renyi", "mub-tsallis", "mum-tsallis", "sic-tsallis", "gsic-tsallis", "corr"};
  return names;
}

EntropyOrder conjugate_order(EntropyOrder alpha) {
  if (alpha.is_infinite()) return EntropyOrder(0.5);
  const double a = alpha.value();
  if (a < 0.5) throw UsageError("conjugate_order: alpha must be at least 1/2");
  if (a == 0.5) return EntropyOrder::infinity();
  return EntropyOrder(a / (2.0 * a - 1.0));
}

std::vector<LocalMeasurement> default_measurement_pair(std::size_t d, double theta) {
  if (d == 2) {
    const double t = theta > 0.0 ? theta : kDefaultTheta;
    return {computational_basis(2), rotated_qubit_basis(t)};
  }
  return {computational_basis(d), pauli_x_basis(d)};
}

std::pair<std::vector<RankOnePovm>, std::vector<RankOnePovm>> default_mub_sides(std::size_t d,
                                                                                std::size_t k) {
  const std::vector<RankOnePovm> bases = prime_pauli_mubs(d);
  if (k == 0 || k > bases.size()) {
    throw UsageError("k must lie between 1 and d+1 for the MUB constructions");
  }
  std::vector<RankOnePovm> side_a(bases.begin(), bases.begin() + static_cast<long>(k));
  std::vector<RankOnePovm> side_b = side_a;
  if (d == 3 && k >= 3) {
    std::swap(side_b[0], side_b[1]);  // Z_A with X_B, X_A with Z_B, Y_A with Y_B
  }
  return {std::move(side_a), std::move(side_b)};
}

CriterionSetup make_criterion_setup(const CriterionOptions& options, std::size_t dim_a,
                                    std::size_t dim_b, const MeasurementSetup* custom) {
  const std::size_t d = require_square(dim_a, dim_b);
  const std::string& name = options.name;
  const EntropyOrder alpha(options.alpha);

  std::vector<std::pair<std::string, double>> params;

  // --- two-measurement criteria ---
  if (name == "mu-renyi" || name == "mu-tsallis" || name == "maj-renyi" ||
      name == "maj-tsallis" || name == "maj-qubit-a" || name == "maj-qubit-b") {
    std::vector<LocalMeasurement> side_a, side_b;
    bool used_theta = false;
    if (custom != nullptr) {
      if (custom->side_a.size() != 2) {
        throw UsageError(name + ": needs exactly two measurements per side");
      }
      side_a = custom->side_a;
      side_b = custom->side_b;
    } else {
      side_a = default_measurement_pair(d, options.theta);
      side_b = side_a;
      used_theta = (d == 2);
    }
    auto m1 = std::make_shared<ConvolutionPovm>(build_convolution_povm(side_a[0], side_b[0]));
    auto m2 = std::make_shared<ConvolutionPovm>(build_convolution_povm(side_a[1], side_b[1]));

    append_param(params, "alpha", alpha.value());
    if (name == "mu-renyi" || name == "mu-tsallis") {
      const EntropyOrder beta =
          options.beta ? EntropyOrder(*options.beta) : conjugate_order(alpha);
      append_param(params, "beta", beta.value());
      if (used_theta) {
        append_param(params, "theta", options.theta > 0.0 ? options.theta : kDefaultTheta);
      }
      const EntropyKind kind =
          (name == "mu-renyi") ? EntropyKind::kRenyi : EntropyKind::kTsallis;
      return finish(name, params, [m1, m2, alpha, beta, kind](const DensityMatrix& rho) {
        return mu_criterion(*m1, *m2, rho, alpha, beta, kind);
      });
    }
    if (used_theta) {
      append_param(params, "theta", options.theta > 0.0 ? options.theta : kDefaultTheta);
    }
    if (name == "maj-renyi" || name == "maj-tsallis") {
      const EntropyKind kind =
          (name == "maj-renyi") ? EntropyKind::kRenyi : EntropyKind::kTsallis;
      return finish(name, params, [m1, m2, alpha, kind](const DensityMatrix& rho) {
        return maj_criterion(*m1, *m2, rho, alpha, kind);
      });
    }
    const QubitMajVariant variant =
        (name == "maj-qubit-a") ? QubitMajVariant::kA : QubitMajVariant::kB;
    return finish(name, params, [m1, m2, alpha, variant](const DensityMatrix& rho) {
      return maj_criterion_qubit(*m1, *m2, rho, alpha, variant);
    });
  }

  // --- K-measurement criteria over MUBs / MUMs ---
  if (name == "mub-renyi" || name == "mub-tsallis" || name == "mum-tsallis") {
    std::vector<LocalMeasurement> side_a, side_b;
    if (custom != nullptr) {
      side_a = custom->side_a;
      side_b = custom->side_b;
    } else {
      auto [bases_a, bases_b] = default_mub_sides(d, options.k);
      if (name == "mum-tsallis") {
        const MumSet mums_a = mum_from_mubs(bases_a, options.kappa_t);
        const MumSet mums_b = mum_from_mubs(bases_b, options.kappa_t);
        for (const GeneralPovm& p : mums_a.povms) side_a.emplace_back(p);
        for (const GeneralPovm& p : mums_b.povms) side_b.emplace_back(p);
      } else {
        for (const RankOnePovm& b : bases_a) side_a.emplace_back(b);
        for (const RankOnePovm& b : bases_b) side_b.emplace_back(b);
      }
    }
    if (side_a.size() != side_b.size() || side_a.empty()) {
      throw UsageError(name + ": sides must carry the same nonzero number of measurements");
    }
    auto ms = std::make_shared<std::vector<ConvolutionPovm>>();
    for (std::size_t t = 0; t < side_a.size(); ++t) {
      ms->push_back(build_convolution_povm(side_a[t], side_b[t]));
    }
    append_param(params, "alpha", alpha.value());
    append_param(params, "k", static_cast<double>(ms->size()));
    if (name == "mum-tsallis") {
      return finish(name, params, [ms, alpha](const DensityMatrix& rho) {
        return mum_criterion(*ms, rho, alpha);
      });
    }
    const EntropyKind kind =
        (name == "mub-renyi") ? EntropyKind::kRenyi : EntropyKind::kTsallis;
    return finish(name, params, [ms, alpha, kind](const DensityMatrix& rho) {
      return mub_criterion(*ms, rho, alpha, kind);
    });
  }

  // --- single-measurement criteria over (general) SICs ---
  if (name == "sic-tsallis" || name == "gsic-tsallis") {
    std::shared_ptr<ConvolutionPovm> m;
    if (custom != nullptr) {
      if (custom->side_a.size() != 1) {
        throw UsageError(name + ": needs exactly one measurement per side");
      }
      m = std::make_shared<ConvolutionPovm>(
          build_convolution_povm(custom->side_a[0], custom->side_b[0]));
    } else if (name == "sic-tsallis") {
      const RankOnePovm sic = sic_povm(d);
      m = std::make_shared<ConvolutionPovm>(build_convolution_povm(sic, sic));
    } else {
      const GeneralSic gsic = gsic_from_sic(sic_povm(d), options.gsic_t);
      m = std::make_shared<ConvolutionPovm>(
          build_convolution_povm(gsic.povm, gsic.povm));
      append_param(params, "a", gsic.purity_a);
    }
    append_param(params, "alpha", alpha.value());
    if (name == "sic-tsallis") {
      return finish(name, params, [m, alpha](const DensityMatrix& rho) {
        return sic_criterion(*m, rho, alpha);
      });
    }
    return finish(name, params, [m, alpha](const DensityMatrix& rho) {
      return gsic_criterion(*m, rho, alpha);
    });
  }

  // --- correlation measure ---
  if (name == "corr") {
    auto pairs = std::make_shared<std::vector<BasisPairing>>();
    if (custom != nullptr) {
      for (std::size_t t = 0; t < custom->side_a.size(); ++t) {
        const RankOnePovm* a = as_rank_one(custom->side_a[t]);
        const RankOnePovm* b = as_rank_one(custom->side_b[t]);
        if (a == nullptr || b == nullptr) {
          throw UsageError("corr: local measurements must be orthonormal bases");
        }
        std::vector<std::size_t> pairing =
            custom->pairings.empty() ? identity_pairing(d) : custom->pairings[t];
        pairs->push_back({*a, *b, std::move(pairing)});
      }
    } else {
      const std::vector<RankOnePovm> bases = prime_pauli_mubs(d);
      const std::size_t k = std::min(options.k, bases.size());
      for (std::size_t t = 0; t < k; ++t) {
        pairs->push_back({bases[t], bases[t], identity_pairing(d)});
      }
    }
    append_param(params, "k", static_cast<double>(pairs->size()));
    return finish(name, params, [pairs](const DensityMatrix& rho) {
      return correlation_report(*pairs, rho);
    });
  }

  throw UsageError("unknown criterion: " + name);
}

std::vector<CriterionSetup> criterion_battery(std::size_t dim_a, std::size_t dim_b,
                                              const CriterionOptions& defaults) {
  const std::size_t d = require_square(dim_a, dim_b);
  std::vector<CriterionSetup> battery;
  auto add = [&](const std::string& name, double alpha, std::optional<double> beta = {}) {
    CriterionOptions options = defaults;
    options.name = name;
    options.alpha = alpha;
    options.beta = beta;
    battery.push_back(make_criterion_setup(options, dim_a, dim_b));
  };

  const double inf = std::numeric_limits<double>::infinity();
  add("mu-renyi", inf);
  add("mu-renyi", 1.0);
  add("mu-tsallis", 2.0);
  add("maj-renyi", 1.0);
  add("maj-renyi", 0.5);
  add("maj-tsallis", 1.0);
  add("maj-tsallis", 2.0);
  if (d == 2) {
    add("maj-qubit-a", 2.0);
    add("maj-qubit-b", 2.0);
  }
  add("mub-tsallis", 2.0);
  add("mub-renyi", d == 2 ? 2.0 : 1.0);
  add("mum-tsallis", 2.0);
  if (d == 2 || d == 3) {
    add("sic-tsallis", 2.0);
    add("gsic-tsallis", 2.0);
  }
  add("corr", 2.0);
  return battery;
}

}  // namespace entrosep
