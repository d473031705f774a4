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

namespace entrosep {

struct ReproduceCheck {
  std::string label;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ReproduceCase {
  std::string name;
  std::vector<ReproduceCheck> checks;
  bool pass = true;
};

const std::vector<std::string>& reproduce_case_names();

/// Regenerates the detection-threshold table on the two test families and
/// compares every entry against its pinned expectation. An empty filter runs
/// all cases.
std::vector<ReproduceCase> run_reproduce(const std::optional<std::string>& case_filter);

}  // namespace entrosep
