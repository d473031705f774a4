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

#include <string>
#include <vector>

#include <json.hpp>

#include "entrosep/criteria.hpp"
#include "entrosep/scan.hpp"

namespace entrosep {

using nlohmann::json;

/// Deterministic "%.12g"; infinities print as "inf".
std::string format_double(double value);

json load_json_file(const std::string& path);

// Complex entries are two-element [re, im] arrays in every schema; NaN and
// infinite tokens are rejected.

json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const json& j);

/// Rank-one POVMs live under "vectors", general POVMs under "elements".
struct RawPovm {
  std::size_t dim = 0;
  bool rank_one = true;
  std::vector<Vector> vectors;
  std::vector<Matrix> elements;
};

RawPovm raw_povm_from_json(const json& j);
LocalMeasurement povm_from_json(const json& j);
json povm_to_json(const LocalMeasurement& m);

/// A per-side list of local measurements; entry t on side a pairs with entry
/// t on side b under the convolution scheme. Optional outcome pairings are
/// used by the correlation measure.
struct MeasurementSetup {
  std::vector<LocalMeasurement> side_a;
  std::vector<LocalMeasurement> side_b;
  std::vector<std::vector<std::size_t>> pairings;
};

json setup_to_json(const MeasurementSetup& setup);
MeasurementSetup setup_from_json(const json& j);

json report_to_json(const CriterionReport& report);
std::string reports_csv_header();
std::string report_to_csv_row(const CriterionReport& report);

json profile_to_json(const SValueProfile& profile);

json threshold_to_json(const ThresholdResult& result);
std::string threshold_csv_header();
std::string threshold_to_csv_row(const ThresholdResult& result);

std::string curve_to_csv(const std::vector<std::pair<double, double>>& curve);

}  // namespace entrosep
