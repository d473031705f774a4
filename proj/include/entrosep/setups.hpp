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

#include <optional>
#include <string>
#include <vector>

#include "entrosep/io.hpp"
#include "entrosep/scan.hpp"

namespace entrosep {

/// Everything a criterion evaluator can be configured with from the command
/// line. beta defaults to the conjugate order alpha/(2 alpha - 1).
struct CriterionOptions {
  std::string name;
  double alpha = 2.0;
  std::optional<double> beta;
  double theta = 0.0;  // 0 = unset; qubit pair default is pi/4
  std::size_t k = 3;
  double kappa_t = 0.8;
  double gsic_t = 0.9;
};

const std::vector<std::string>& criterion_names();

/// Conjugate order under 1/alpha + 1/beta = 2 (infinity pairs with 1/2).
EntropyOrder conjugate_order(EntropyOrder alpha);

/// Default local measurement pair for the two-measurement criteria:
/// (Z, rotated theta) for qubits, (Z, X) otherwise.
std::vector<LocalMeasurement> default_measurement_pair(std::size_t d, double theta);

/// Default per-side MUB lists for K-measurement criteria. For two qutrits
/// with K = 3 the sides are cross-paired (Z_A with X_B, X_A with Z_B,
/// Y_A with Y_B), the configuration adapted to the qutrit test family.
std::pair<std::vector<RankOnePovm>, std::vector<RankOnePovm>> default_mub_sides(std::size_t d,
                                                                                std::size_t k);

/// Binds a criterion to concrete measurements for a (d, d) bipartite system.
/// `custom` overrides the constructed defaults with user-supplied locals.
CriterionSetup make_criterion_setup(const CriterionOptions& options, std::size_t dim_a,
                                    std::size_t dim_b,
                                    const MeasurementSetup* custom = nullptr);

/// Every criterion applicable to the given dimensions, at default parameters.
std::vector<CriterionSetup> criterion_battery(std::size_t dim_a, std::size_t dim_b,
                                              const CriterionOptions& defaults);

}  // namespace entrosep
