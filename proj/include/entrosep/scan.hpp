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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entrosep/criteria.hpp"
#include "entrosep/states.hpp"

namespace entrosep {

/// A criterion bound to a concrete measurement setup, ready to evaluate on
/// any state of the right dimensions.
struct CriterionSetup {
  std::string id;
  std::vector<std::pair<std::string, double>> params;
  std::function<CriterionReport(const DensityMatrix&)> evaluate;
};

/// Detection threshold of one criterion on a parametric family. c_star is
/// empty when the criterion is not violated anywhere on [0, 1].
struct ThresholdResult {
  std::string family;
  std::string criterion_id;
  std::vector<std::pair<std::string, double>> params;
  std::optional<double> c_star;
  std::pair<double, double> bracket{0.0, 0.0};
  std::size_t iterations = 0;
  std::vector<std::pair<double, double>> prescan;  // (c, margin)
};

/// Pre-scans the margin on a uniform grid, checks that detection is monotone
/// in c, then bisects the violation onset to |bracket| <= 1e-8.
ThresholdResult scan_threshold(const StateFamily& family, const CriterionSetup& criterion,
                               std::size_t prescan_points = 11);

/// (c, margin) samples for plot output.
std::vector<std::pair<double, double>> margin_curve(const StateFamily& family,
                                                    const CriterionSetup& criterion,
                                                    std::size_t points = 101);

}  // namespace entrosep
